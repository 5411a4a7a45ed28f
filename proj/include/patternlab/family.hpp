#pragma once

#include <patternlab/multipoly.hpp>
#include <patternlab/series.hpp>

#include <json.hpp>

#include <functional>
#include <future>
#include <string>
#include <vector>

namespace patternlab {

/// A generating-function family: one polynomial entry per size n = 0..n_max
/// over a fixed variable list. Entry 0 is the constant 1 and the all-ones
/// evaluation of entry n is the number of permutations the entry ranges over.
struct family_table {
    std::string id;
    std::vector<std::string> vars;
    std::vector<multipoly> entries;

    int n_max() const { return static_cast<int>(entries.size()) - 1; }
    int arity() const { return static_cast<int>(vars.size()); }
    const multipoly& entry(int n) const { return entries.at(static_cast<size_t>(n)); }
};

/// Sum f(k) for k in [k_begin, k_end). With threads > 1 the range is cut
/// into contiguous chunks evaluated concurrently; chunk sums are combined in
/// chunk order. Addition of exact polynomials is associative and
/// commutative, so the result is identical for every thread count.
inline multipoly sum_indexed(int k_begin, int k_end, int arity,
                             const std::function<multipoly(int)>& f, int threads = 1) {
    if (k_begin >= k_end) return multipoly(arity);
    if (threads <= 1 || k_end - k_begin < 2 * threads) {
        multipoly acc(arity);
        for (int k = k_begin; k < k_end; ++k) acc += f(k);
        return acc;
    }
    const int total = k_end - k_begin;
    const int chunks = std::min(threads, total);
    std::vector<std::future<multipoly>> parts;
    parts.reserve(static_cast<size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        int lo = k_begin + static_cast<int>(static_cast<long long>(total) * c / chunks);
        int hi = k_begin + static_cast<int>(static_cast<long long>(total) * (c + 1) / chunks);
        parts.push_back(std::async(std::launch::async, [lo, hi, arity, &f]() {
            multipoly acc(arity);
            for (int k = lo; k < hi; ++k) acc += f(k);
            return acc;
        }));
    }
    multipoly acc(arity);
    for (auto& part : parts) acc += part.get();
    return acc;
}

/// Coefficient series n -> weight(entry n), e.g. with an all-ones or
/// derivative weight.
inline series series_from_family(const family_table& t, const std::function<bigint(const multipoly&)>& weight) {
    series s(t.n_max());
    for (int n = 0; n <= t.n_max(); ++n) s[n] = weight(t.entry(n));
    return s;
}

/// Text rendering, one line per size: "t^n: <canonical polynomial>".
inline std::string render_series_text(const family_table& t) {
    std::string out;
    for (int n = 0; n <= t.n_max(); ++n)
        out += "t^" + std::to_string(n) + ": " + to_text(t.entry(n), t.vars) + "\n";
    return out;
}

inline nlohmann::ordered_json family_to_json(const family_table& t) {
    nlohmann::ordered_json j;
    j["family"] = t.id;
    j["vars"] = t.vars;
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= t.n_max(); ++n) {
        nlohmann::ordered_json e;
        e["n"] = n;
        e["poly"] = to_json(t.entry(n));
        entries.push_back(std::move(e));
    }
    return j;
}

} // namespace patternlab
