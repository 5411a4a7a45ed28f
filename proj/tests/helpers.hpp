#pragma once

#include <patternlab/multipoly.hpp>
#include <patternlab/permutation.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline patternlab::multipoly random_poly(int arity, int max_terms = 5, int max_exp = 4, bool signed_coeffs = true) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_exp);
    std::uniform_int_distribution<int> coeff(signed_coeffs ? -9 : 1, 9);
    patternlab::multipoly p(arity);
    const int t = nterms(rng());
    for (int i = 0; i < t; ++i) {
        patternlab::exp_vec e(static_cast<size_t>(arity));
        for (auto& x : e) x = static_cast<patternlab::exp_t>(expo(rng()));
        int c = coeff(rng());
        if (c == 0) c = 1;
        p.add_term(std::move(e), c);
    }
    return p;
}

inline std::vector<patternlab::permutation> all_perms(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    std::vector<patternlab::permutation> out;
    do {
        out.push_back(patternlab::permutation::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// All patterns of the given lengths, lexicographic within each length.
inline std::vector<patternlab::permutation> all_patterns_up_to(int max_len, int min_len = 1) {
    std::vector<patternlab::permutation> out;
    for (int m = min_len; m <= max_len; ++m) {
        auto ps = all_perms(m);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// Strip the TeX wrapping used in the transcribed display blocks so the
/// polynomial parser can read them: \left( ... \right) become plain parens,
/// \left. / \right. vanish, then all backslashes, dollars and braces go.
inline std::string strip_tex(std::string s) {
    auto replace_all = [&](const std::string& from, const std::string& to) {
        size_t pos = 0;
        while ((pos = s.find(from, pos)) != std::string::npos) {
            s.replace(pos, from.size(), to);
            pos += to.size();
        }
    };
    replace_all("\\left(", "(");
    replace_all("\\right)", ")");
    replace_all("\\left.", "");
    replace_all("\\right.", "");
    replace_all("\\left", "");
    replace_all("\\right", "");
    std::string out;
    for (char c : s)
        if (c != '\\' && c != '$' && c != '{' && c != '}' && c != '\n' && c != '\r') out += c;
    return out;
}

inline patternlab::multipoly parse_tex(const std::string& text, const std::vector<std::string>& names) {
    return patternlab::parse_poly(strip_tex(text), names);
}

} // namespace testutil
