#pragma once

#include <patternlab/dyck.hpp>
#include <patternlab/family.hpp>
#include <patternlab/permutation.hpp>
#include <patternlab/rec123.hpp>
#include <patternlab/rec132.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace patternlab {

/// What a brute-force generating function ranges over: the avoidance class
/// inside S_n, the tracked pattern list (one variable per pattern, in list
/// order), then optional statistic flags appended in the fixed order
/// lrmin, linv, coinv.
struct gf_spec {
    int n = 0;
    pattern_set avoid;
    pattern_set track;
    bool lrmin = false;
    bool linv = false;
    bool coinv = false;

    int arity() const {
        return static_cast<int>(track.size()) + (lrmin ? 1 : 0) + (linv ? 1 : 0) + (coinv ? 1 : 0);
    }

    std::vector<std::string> var_names() const {
        std::vector<std::string> names;
        for (const auto& p : track) names.push_back("o" + p.str());
        if (lrmin) names.push_back("lrmin");
        if (linv) names.push_back("linv");
        if (coinv) names.push_back("coinv");
        return names;
    }
};

/// Direct enumeration: sum the tracked monomial over every avoider of size
/// spec.n. This is the reference implementation every recursion is tested
/// against; it uses only the permutation layer.
inline multipoly brute_gf(const gf_spec& spec) {
    check_pattern_set(spec.avoid);
    check_pattern_set(spec.track);
    multipoly out(spec.arity());
    enumerate_avoiders(spec.n, spec.avoid, [&](const permutation& sigma) {
        exp_vec e;
        e.reserve(static_cast<size_t>(spec.arity()));
        for (const auto& tau : spec.track) e.push_back(checked_exp(occurrences(sigma, tau)));
        if (spec.lrmin || spec.linv || spec.coinv) {
            perm_stats st = stats(sigma);
            if (spec.lrmin) e.push_back(checked_exp(st.lrmin));
            if (spec.linv) e.push_back(checked_exp(st.linv));
            if (spec.coinv) e.push_back(checked_exp(st.coinv));
        }
        out.add_term(std::move(e), 1);
    });
    return out;
}

namespace detail {

inline pattern_set patterns_from(std::initializer_list<const char*> texts) {
    pattern_set ps;
    for (const char* t : texts) ps.push_back(permutation::parse(t));
    return ps;
}

inline permutation incr_pattern(int m) {
    return permutation::identity(m);
}

/// 1 m (m-1) ... 2.
inline permutation desc_hook_pattern(int m) {
    std::vector<int> v{1};
    for (int x = m; x >= 2; --x) v.push_back(x);
    return permutation::from_one_line(v);
}

} // namespace detail

/// Tracked pattern lists in table variable order.
inline pattern_set gamma2() { return detail::patterns_from({"12", "21"}); }
inline pattern_set gamma3() { return detail::patterns_from({"123", "213", "231", "312", "321"}); }
inline pattern_set gamma4() {
    return detail::patterns_from({"1234", "2134", "2314", "2341", "3124", "3214", "3241",
                                  "3412", "3421", "4123", "4213", "4231", "4312", "4321"});
}

struct check_report {
    std::string family;
    int n_max = 0;
    bool equal = true;
    std::string first_mismatch;
    std::vector<std::string> lines;

    nlohmann::ordered_json verdict() const {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["n"] = n_max;
        j["equal"] = equal;
        if (first_mismatch.empty()) j["first_mismatch"] = nullptr;
        else j["first_mismatch"] = first_mismatch;
        return j;
    }
};

namespace detail {

/// Record one entry comparison in the report; family_aligned must already
/// be in the oracle's variable order.
inline void compare_entry(check_report& rep, int n, const multipoly& family_aligned,
                          const multipoly& oracle, const std::vector<std::string>& names) {
    if (family_aligned == oracle) {
        rep.lines.push_back("n=" + std::to_string(n) + ": ok (" + std::to_string(oracle.term_count()) + " terms)");
        return;
    }
    rep.equal = false;
    multipoly diff = family_aligned - oracle;
    const auto& [e, c] = *diff.terms().begin();
    std::string mono = to_text(multipoly::monomial(diff.arity(), e), names);
    std::string msg = "n=" + std::to_string(n) + ": differs at " + mono +
                      " (recursion " + family_aligned.coefficient(e).str() +
                      ", oracle " + oracle.coefficient(e).str() + ")";
    rep.lines.push_back(msg);
    if (rep.first_mismatch.empty()) rep.first_mismatch = msg;
}

/// Reorder a polynomial into the oracle's variable order: to_oracle[v] is
/// the oracle slot of family slot v.
inline multipoly reorder(const multipoly& p, const std::vector<int>& to_oracle) {
    std::vector<exp_vec> images;
    for (int v = 0; v < p.arity(); ++v) {
        exp_vec e(to_oracle.size(), 0);
        e[static_cast<size_t>(to_oracle[static_cast<size_t>(v)])] = 1;
        images.push_back(std::move(e));
    }
    return p.substitute(substitution{std::move(images)});
}

} // namespace detail

/// Compare a recursion family against direct enumeration for every size up
/// to n_max. Family ids: fh, s3, s4, p123, p213, p231, p312, p321,
/// incr<m>, desc<m>, dtable.
inline check_report check_family(const std::string& id, int n_max, int threads = 1) {
    check_report rep;
    rep.family = id;
    rep.n_max = n_max;
    auto run = [&](const pattern_set& avoid, const pattern_set& track, bool lrmin, bool linv, bool coinv,
                   const std::function<multipoly(int)>& family_entry_in_oracle_order) {
        gf_spec spec;
        spec.avoid = avoid;
        spec.track = track;
        spec.lrmin = lrmin;
        spec.linv = linv;
        spec.coinv = coinv;
        for (int n = 0; n <= n_max; ++n) {
            spec.n = n;
            detail::compare_entry(rep, n, family_entry_in_oracle_order(n), brute_gf(spec), spec.var_names());
        }
    };
    const pattern_set avoid132 = detail::patterns_from({"132"});
    const pattern_set avoid123 = detail::patterns_from({"123"});

    if (id == "fh") {
        family_table t = fh_table(n_max, threads);
        run(avoid132, gamma2(), false, false, false, [&](int n) { return t.entry(n); });
    } else if (id == "s3") {
        family_table t = s3_table(n_max, threads);
        pattern_set track = gamma2();
        for (auto& p : gamma3()) track.push_back(p);
        run(avoid132, track, false, false, false, [&](int n) { return t.entry(n); });
    } else if (id == "s4") {
        s4_family f = s4_table(n_max);
        pattern_set track = gamma2();
        for (auto& p : gamma3()) track.push_back(p);
        for (auto& p : gamma4()) track.push_back(p);
        run(avoid132, track, false, false, false, [&](int n) { return f.assembled(n); });
    } else if (id.size() == 4 && id[0] == 'p') {
        permutation gamma = permutation::parse(id.substr(1));
        family_table t = p_table(n_max, gamma, threads);
        // family order (q, x) = (coinv, occ gamma); oracle order (occ gamma, coinv)
        run(avoid132, {gamma}, false, false, true,
            [&](int n) { return detail::reorder(t.entry(n), {1, 0}); });
    } else if (id.rfind("incr", 0) == 0) {
        const int m = std::stoi(id.substr(4));
        family_table t = incr_tower_table(n_max, m, threads);
        pattern_set track;
        for (int j = 2; j <= m; ++j) track.push_back(detail::incr_pattern(j));
        run(avoid132, track, false, false, false, [&](int n) { return t.entry(n); });
    } else if (id.rfind("desc", 0) == 0) {
        const int m = std::stoi(id.substr(4));
        family_table t = desc_tower_table(n_max, m, threads);
        pattern_set track;
        for (int j = 2; j <= m; ++j) track.push_back(detail::desc_hook_pattern(j));
        // family order (s, x2..xm) -> oracle order (x2..xm, lrmin)
        std::vector<int> to_oracle{m - 1};
        for (int j = 0; j + 1 < m; ++j) to_oracle.push_back(j);
        run(avoid123, track, true, false, false,
            [&](int n) { return detail::reorder(t.entry(n), to_oracle); });
    } else if (id == "dtable") {
        d_family f = d_table(n_max);
        // family order (s, q, x, y) -> oracle order (q=o12, y=o231, s=lrmin, x=linv)
        run(avoid123, detail::patterns_from({"12", "231"}), true, true, false,
            [&](int n) { return detail::reorder(f.sum_with_lrmin(n), {2, 0, 3, 1}); });
    } else {
        throw std::invalid_argument("check_family: unknown family id '" + id + "'");
    }
    return rep;
}

/// Internal-consistency suite: the finer tables must specialize onto the
/// coarser ones, and the two reverse-symmetric length-3 specializations of
/// the full table must coincide.
inline check_report refinement_chain_check(int n_max, int threads = 1) {
    check_report rep;
    rep.family = "refinement";
    rep.n_max = n_max;
    s4_family s4 = s4_table(n_max);
    family_table s3 = s3_table(n_max, threads);
    family_table fh = fh_table(n_max, threads);
    family_table tower3 = incr_tower_table(n_max, 3, threads);
    family_table p123 = p_table(n_max, permutation::parse("123"), threads);
    std::vector<int> ys;
    for (int v = 7; v < 21; ++v) ys.push_back(v);
    auto expect = [&](int n, const char* what, const multipoly& a, const multipoly& b) {
        if (a == b) {
            rep.lines.push_back("n=" + std::to_string(n) + " " + what + ": ok");
            return;
        }
        rep.equal = false;
        std::string msg = "n=" + std::to_string(n) + " " + what + ": differs";
        rep.lines.push_back(msg);
        if (rep.first_mismatch.empty()) rep.first_mismatch = msg;
    };
    for (int n = 0; n <= n_max; ++n) {
        expect(n, "s4 -> s3", s4.assembled(n).specialize(ys), s3.entry(n));
        expect(n, "s3 -> fh", s3.entry(n).specialize({2, 3, 4, 5, 6}), fh.entry(n));
        expect(n, "tower3 -> occ12 only", tower3.entry(n).specialize({1}), fh.entry(n).specialize({1}));
        expect(n, "tower3 -> occ123 only", tower3.entry(n).specialize({0}), p123.entry(n).specialize({0}));
        expect(n, "231 vs 312 marginal", s3.entry(n).specialize({0, 1, 2, 3, 5, 6}),
               s3.entry(n).specialize({0, 1, 2, 3, 4, 6}));
    }
    return rep;
}

/// Two exact-count observations on single-occurrence permutations:
/// for n >= 4, |{sigma in S_n(123): occ(231) = 1}| =
/// |{sigma in S_n(231): occ(123) = 1}| = 2n - 5, and
/// |{sigma in S_n(132): occ(3412) = 1}| =
/// |{sigma in S_n(132): occ(2341) = 1}| = fib(2n - 5) - 1
/// with fib(1) = fib(2) = 1.
struct observation_report {
    bool ok = true;
    std::vector<std::string> lines;
};

inline observation_report observation_suite(int n_linear_max = 9, int n_fib_max = 8) {
    observation_report rep;
    auto expect = [&](const std::string& line, bool good) {
        rep.lines.push_back(line + (good ? " ok" : " FAIL"));
        rep.ok = rep.ok && good;
    };
    const permutation p231 = permutation::parse("231");
    const permutation p123 = permutation::parse("123");
    for (int n = 4; n <= n_linear_max; ++n) {
        long long a = 0, b = 0;
        enumerate_avoiders(n, {p123}, [&](const permutation& s) { a += occurrences(s, p231) == 1; });
        enumerate_avoiders(n, {p231}, [&](const permutation& s) { b += occurrences(s, p123) == 1; });
        const long long want = 2LL * n - 5;
        expect("n=" + std::to_string(n) + ": one 231 in S_n(123): " + std::to_string(a) +
               ", one 123 in S_n(231): " + std::to_string(b) + ", expected " + std::to_string(want),
               a == want && b == want);
    }
    const permutation p3412 = permutation::parse("3412");
    const permutation p2341 = permutation::parse("2341");
    const permutation p132 = permutation::parse("132");
    for (int n = 4; n <= n_fib_max; ++n) {
        long long c = 0, d = 0;
        enumerate_avoiders(n, {p132}, [&](const permutation& s) {
            c += occurrences(s, p3412) == 1;
            d += occurrences(s, p2341) == 1;
        });
        const bigint want = fibonacci(2 * n - 5) - 1;
        expect("n=" + std::to_string(n) + ": one 3412 in S_n(132): " + std::to_string(c) +
               ", one 2341 in S_n(132): " + std::to_string(d) + ", expected " + want.str(),
               bigint(c) == want && bigint(d) == want);
    }
    return rep;
}

} // namespace patternlab
