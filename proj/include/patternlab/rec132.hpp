#pragma once

#include <patternlab/family.hpp>
#include <patternlab/permutation.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace patternlab {

/// Every builder here runs the same engine: split a 132-avoider around its
/// maximum (left part A, maximum at position k, right part B), multiply the
/// shifted generating functions of the parts, and add the monomial carrying
/// the cross occurrences that use the maximum or straddle the split. The
/// table entry for size n is the sum over k = 1..n.

/// Joint distribution of occ(12), occ(21) over S_n(132).
/// Cross terms at split k: 12 gains k-1 (left value, maximum), 21 gains
/// k(n-k) (every left-or-maximum value beats every right value).
inline family_table fh_table(int n_max, int threads = 1) {
    family_table t;
    t.id = "fh";
    t.vars = {"x1", "x2"};
    t.entries.push_back(multipoly::constant(2, 1));
    for (int n = 1; n <= n_max; ++n) {
        const auto& e = t.entries;
        multipoly qn = sum_indexed(1, n + 1, 2, [&](int k) {
            exp_vec pre{checked_exp(k - 1), checked_exp(static_cast<long long>(k) * (n - k))};
            multipoly term = (e[static_cast<size_t>(k) - 1] * e[static_cast<size_t>(n - k)]).scale_monomial(pre);
            term.assert_polynomial("fh summand");
            return term;
        }, threads);
        t.entries.push_back(std::move(qn));
    }
    return t;
}

/// Joint distribution of all patterns of lengths 2 and 3 over S_n(132);
/// variables x1..x7 track 12, 21, 123, 213, 231, 312, 321 in that order.
/// The left table is reweighted so its 12/21 counts also feed the longer
/// patterns completed by the maximum or by right-side values; likewise for
/// the right table.
inline family_table s3_table(int n_max, int threads = 1) {
    family_table t;
    t.id = "s3";
    t.vars = default_names(7);
    t.entries.push_back(multipoly::constant(7, 1));
    auto img = [](std::initializer_list<std::pair<int, long long>> powers) {
        exp_vec e(7, 0);
        for (auto [v, p] : powers) e[static_cast<size_t>(v)] = checked_exp(p);
        return e;
    };
    for (int n = 1; n <= n_max; ++n) {
        const auto& e = t.entries;
        multipoly qn = sum_indexed(1, n + 1, 7, [&](int k) {
            // left part: each 12 also completes a 123 (with the maximum) and
            // n-k copies of 231; each 21 completes a 213 and n-k copies of 321
            substitution sub_left = substitution::identity(7);
            sub_left.map(0, img({{0, 1}, {2, 1}, {4, n - k}}));
            sub_left.map(1, img({{1, 1}, {3, 1}, {6, n - k}}));
            // right part: each 12 gains k copies of 312, each 21 gains k of 321
            substitution sub_right = substitution::identity(7);
            sub_right.map(0, img({{0, 1}, {5, static_cast<long long>(k)}}));
            sub_right.map(1, img({{1, 1}, {6, static_cast<long long>(k)}}));
            // pairs using the maximum itself, and 231s from (left, max|left, right)
            exp_vec pre = img({{0, k - 1},
                               {1, static_cast<long long>(k) * (n - k)},
                               {4, static_cast<long long>(k - 1) * (n - k)}});
            multipoly term = (e[static_cast<size_t>(k) - 1].substitute(sub_left) *
                              e[static_cast<size_t>(n - k)].substitute(sub_right))
                                 .scale_monomial(pre);
            term.assert_polynomial("s3 summand");
            return term;
        }, threads);
        t.entries.push_back(std::move(qn));
    }
    return t;
}

/// Joint distribution of (coinv, occ(gamma)) over S_n(132) for one pattern
/// gamma of length 3, variables (q, x). The split-k summand reweights the
/// part tables through a monomial substitution in q that may pass through
/// Laurent territory; the prefactor restores polynomiality, which is
/// asserted per summand.
inline family_table p_table(int n_max, const permutation& gamma, int threads = 1) {
    const std::string g = gamma.str();
    if (g != "123" && g != "213" && g != "231" && g != "312" && g != "321")
        throw std::invalid_argument("p_table: gamma must be a 132-avoiding length-3 pattern, got " + g);
    family_table t;
    t.id = "p" + g;
    t.vars = {"q", "x"};
    t.entries.push_back(multipoly::constant(2, 1));
    auto q_to = [](long long xpow) {
        // q |-> q * x^xpow, x untouched
        substitution s = substitution::identity(2);
        s.map(0, exp_vec{1, checked_exp(xpow)});
        return s;
    };
    for (int n = 1; n <= n_max; ++n) {
        const auto& e = t.entries;
        multipoly qn = sum_indexed(1, n + 1, 2, [&](int k) {
            const multipoly& A = e[static_cast<size_t>(k) - 1];
            const multipoly& B = e[static_cast<size_t>(n - k)];
            long long q_pre = k - 1, x_pre = 0;
            multipoly prod(2);
            if (g == "123") {
                prod = A.substitute(q_to(1)) * B;
            } else if (g == "213") {
                x_pre = binom2(k - 1);
                prod = A.substitute(q_to(-1)) * B;
            } else if (g == "231") {
                x_pre = static_cast<long long>(k - 1) * (n - k);
                prod = A.substitute(q_to(n - k)) * B;
            } else if (g == "312") {
                prod = A * B.substitute(q_to(k));
            } else { // 321
                long long twice = static_cast<long long>(n - k) * (static_cast<long long>(k) * n - 4 * k + 2);
                if (twice % 2 != 0) throw std::logic_error("p321 prefactor exponent is not an integer");
                x_pre = twice / 2;
                prod = A.substitute(q_to(-(n - k))) * B.substitute(q_to(-k));
            }
            multipoly term = prod.scale_monomial(exp_vec{checked_exp(q_pre), checked_exp(x_pre)});
            term.assert_polynomial(("p" + g + " summand").c_str());
            return term;
        }, threads);
        t.entries.push_back(std::move(qn));
    }
    return t;
}

/// Joint distribution of the increasing towers 12, 123, ..., 12...m over
/// S_n(132); variables x2..xm, where x_j tracks occ(12...j). The left part
/// sees the maximum and the whole right block above it, which promotes each
/// length-j tower to length j+1: the shift x_j |-> x_j * x_{j+1} is
/// independent of the split, so the shifted table is cached alongside.
inline family_table incr_tower_table(int n_max, int m, int threads = 1) {
    if (m < 2) throw std::invalid_argument("incr_tower_table: m must be at least 2");
    const int a = m - 1;
    family_table t;
    t.id = "incr" + std::to_string(m);
    for (int j = 2; j <= m; ++j) t.vars.push_back("x" + std::to_string(j));
    substitution shift = substitution::identity(a);
    for (int v = 0; v + 1 < a; ++v) {
        exp_vec e(static_cast<size_t>(a), 0);
        e[static_cast<size_t>(v)] = 1;
        e[static_cast<size_t>(v) + 1] = 1;
        shift.map(v, std::move(e));
    }
    t.entries.push_back(multipoly::constant(a, 1));
    std::vector<multipoly> shifted{t.entries[0].substitute(shift)};
    for (int n = 1; n <= n_max; ++n) {
        multipoly qn = sum_indexed(1, n + 1, a, [&](int k) {
            exp_vec pre(static_cast<size_t>(a), 0);
            pre[0] = checked_exp(k - 1); // pairs (left or max, right) ending at the maximum
            multipoly term = (shifted[static_cast<size_t>(k) - 1] * t.entries[static_cast<size_t>(n - k)])
                                 .scale_monomial(pre);
            term.assert_polynomial("incr tower summand");
            return term;
        }, threads);
        t.entries.push_back(std::move(qn));
        shifted.push_back(t.entries.back().substitute(shift));
    }
    return t;
}

/// Joint distribution over S_n(132) of all patterns of lengths 3 and 4,
/// refined by i = occ(12). Grid entries Q[n][i] live over 19 variables:
/// x1..x5 track 123, 213, 231, 312, 321 and y1..y14 track the length-4
/// patterns 1234, 2134, 2314, 2341, 3124, 3214, 3241, 3412, 3421, 4123,
/// 4213, 4231, 4312, 4321. Assembling over i restores the 12/21 pair.
struct s4_family {
    std::vector<std::string> vars;             // x1..x5, y1..y14
    std::vector<std::vector<multipoly>> grid;  // grid[n][i] for 0 <= i <= C(n,2)

    int n_max() const { return static_cast<int>(grid.size()) - 1; }

    const multipoly& entry(int n, int i) const {
        static const multipoly zero(19);
        if (n < 0 || n > n_max()) throw std::out_of_range("s4_family::entry: n out of range");
        const auto& row = grid[static_cast<size_t>(n)];
        if (i < 0 || i >= static_cast<int>(row.size())) return zero;
        return row[static_cast<size_t>(i)];
    }

    static std::vector<std::string> assembled_vars() {
        std::vector<std::string> v = default_names(7);
        for (int i = 1; i <= 14; ++i) v.push_back("y" + std::to_string(i));
        return v;
    }

    /// Sum over i of x1^i x2^(C(n,2)-i) times the grid entry, embedded into
    /// the 21-variable ring x1, x2 (12, 21), x3..x7 (length 3), y1..y14.
    multipoly assembled(int n) const {
        if (n < 0 || n > n_max()) throw std::out_of_range("s4_family::assembled: n out of range");
        std::vector<exp_vec> images;
        for (int v = 0; v < 19; ++v) {
            // table slot v maps to assembled slot v+2: x1..x5 -> x3..x7 and
            // y1..y14 keep their names two places later
            exp_vec e(21, 0);
            e[static_cast<size_t>(v) + 2] = 1;
            images.push_back(std::move(e));
        }
        substitution embed{std::move(images)};
        multipoly out(21);
        const long long total = binom2(n);
        for (int i = 0; i < static_cast<int>(grid[static_cast<size_t>(n)].size()); ++i) {
            exp_vec pre(21, 0);
            pre[0] = checked_exp(i);
            pre[1] = checked_exp(total - i);
            out += grid[static_cast<size_t>(n)][static_cast<size_t>(i)].substitute(embed).scale_monomial(pre);
        }
        return out;
    }
};

inline s4_family s4_table(int n_max) {
    // variable slots: 0..4 = x1..x5; 4+i = y_i
    constexpr int X1 = 0, X2 = 1, X3 = 2, X4 = 3, X5 = 4;
    auto Y = [](int i) { return 4 + i; };
    s4_family f;
    f.vars = default_names(5);
    for (int i = 1; i <= 14; ++i) f.vars.push_back("y" + std::to_string(i));
    f.grid.push_back({multipoly::constant(19, 1)});
    for (int n = 1; n <= n_max; ++n) {
        std::vector<multipoly> row;
        const long long imax = binom2(n);
        for (long long i = 0; i <= imax; ++i) {
            multipoly acc(19);
            for (int k = 1; k <= n; ++k) {
                // left part A (size k-1) sits above max and right part B; its
                // 12-count is j, its 21-count C(k-1,2)-j, and both multiply
                // into longer patterns through the images below
                substitution subA = substitution::identity(19);
                auto imgA = [&](int x, int y_pair, int y_block) {
                    exp_vec e(19, 0);
                    e[static_cast<size_t>(x)] = 1;
                    e[static_cast<size_t>(y_pair)] = 1;
                    e[static_cast<size_t>(y_block)] = checked_exp(n - k);
                    return e;
                };
                subA.map(X1, imgA(X1, Y(1), Y(4)));  // 123 -> 1234 with max, 2341 with right block
                subA.map(X2, imgA(X2, Y(2), Y(7)));  // 213 -> 2134, 3241
                subA.map(X3, imgA(X3, Y(3), Y(9)));  // 231 -> 2314, 3421
                subA.map(X4, imgA(X4, Y(5), Y(12))); // 312 -> 3124, 4312 completions
                subA.map(X5, imgA(X5, Y(6), Y(14))); // 321 -> 3214, 4321 completions
                substitution subB = substitution::identity(19);
                auto imgB = [&](int x, int y) {
                    exp_vec e(19, 0);
                    e[static_cast<size_t>(x)] = 1;
                    e[static_cast<size_t>(y)] = checked_exp(k);
                    return e;
                };
                subB.map(X1, imgB(X1, Y(10))); // right 123 under any left-or-max value: 4123
                subB.map(X2, imgB(X2, Y(11))); // 4213
                subB.map(X3, imgB(X3, Y(12))); // 4231
                subB.map(X4, imgB(X4, Y(13))); // 4312
                subB.map(X5, imgB(X5, Y(14))); // 4321
                const long long a21 = binom2(k - 1); // upper bound for j on the left
                const long long bmax = binom2(n - k);
                for (long long j = 0; j <= i + 1 - k; ++j) {
                    if (j > a21) break;
                    const long long ib = i + 1 - k - j; // 12-count of the right part
                    if (ib < 0 || ib > bmax) continue;
                    const multipoly& A = f.grid[static_cast<size_t>(k) - 1][static_cast<size_t>(j)];
                    const multipoly& B = f.grid[static_cast<size_t>(n) - static_cast<size_t>(k)][static_cast<size_t>(ib)];
                    if (A.is_zero() || B.is_zero()) continue;
                    exp_vec pre(19, 0);
                    auto set = [&](int v, long long p) { pre[static_cast<size_t>(v)] = checked_exp(p); };
                    set(X1, j);                                               // left 12 + max
                    set(X2, a21 - j);                                         // left 21 + max
                    set(X3, static_cast<long long>(n - k) * (k + j - 1));     // (left 12 or left-or-max pair) + right value
                    set(X4, static_cast<long long>(k) * ib);                  // left-or-max value + right 12
                    set(X5, static_cast<long long>(n - k) * (a21 - j) + static_cast<long long>(k) * (bmax - ib));
                    set(Y(4), j * (n - k));                                   // left 12 + max + right value
                    set(Y(7), (a21 - j) * (n - k));                           // left 21 + max + right value
                    set(Y(8), (j + k - 1) * ib);                              // left-pair-or-max completions of right 12
                    set(Y(9), (j + k - 1) * (bmax - ib));                     // same over right 21
                    set(Y(13), (a21 - j) * ib);
                    set(Y(14), (a21 - j) * (bmax - ib));
                    multipoly term = (A.substitute(subA) * B.substitute(subB)).scale_monomial(pre);
                    term.assert_polynomial("s4 summand");
                    acc += term;
                }
            }
            row.push_back(std::move(acc));
        }
        f.grid.push_back(std::move(row));
    }
    return f;
}

/// The closure of the empty permutation under the four append/prepend
/// constructors that keep the splitting recursion collision-free:
///   s1 = sigma . (n+1)
///   s2 = (n+2) . sigma . (n+1)
///   s3 = (sigma_1+1)...(sigma_n+1) . (n+2) . 1
///   s4 = (n+3) . (sigma_1+1)...(sigma_n+1) . (n+2) . 1
/// counts[n] then satisfies a_n = a_{n-1} + 2 a_{n-2} + a_{n-3}.
struct census_result {
    std::vector<long long> counts;
    std::vector<std::vector<permutation>> members; // lexicographically sorted
};

inline census_result good_recursion_census(int n_max) {
    if (n_max < 0) throw std::invalid_argument("good_recursion_census: negative n_max");
    std::vector<std::set<permutation>> levels(static_cast<size_t>(n_max) + 1);
    levels[0].insert(permutation());
    auto push = [&](int n, const permutation& p) {
        if (n <= n_max) levels[static_cast<size_t>(n)].insert(p);
    };
    for (int n = 0; n <= n_max; ++n) {
        for (const permutation& s : levels[static_cast<size_t>(n)]) {
            std::vector<int> base;
            base.reserve(static_cast<size_t>(n));
            for (int x : s.values()) base.push_back(x + 1);
            std::vector<int> up = base;
            for (int& x : up) ++x;

            std::vector<int> v1 = base;
            v1.push_back(n + 1);
            push(n + 1, permutation::from_one_line(v1));

            std::vector<int> v2;
            v2.push_back(n + 2);
            v2.insert(v2.end(), base.begin(), base.end());
            v2.push_back(n + 1);
            push(n + 2, permutation::from_one_line(v2));

            std::vector<int> v3 = up;
            v3.push_back(n + 2);
            v3.push_back(1);
            push(n + 2, permutation::from_one_line(v3));

            std::vector<int> v4;
            v4.push_back(n + 3);
            v4.insert(v4.end(), up.begin(), up.end());
            v4.push_back(n + 2);
            v4.push_back(1);
            push(n + 3, permutation::from_one_line(v4));
        }
    }
    census_result r;
    for (int n = 0; n <= n_max; ++n) {
        const auto& lv = levels[static_cast<size_t>(n)];
        r.counts.push_back(static_cast<long long>(lv.size()));
        r.members.emplace_back(lv.begin(), lv.end());
    }
    return r;
}

} // namespace patternlab
