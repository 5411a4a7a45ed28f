#pragma once

#include <patternlab/family.hpp>
#include <patternlab/permutation.hpp>
#include <patternlab/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace patternlab {

/// Total occurrence counts: coefficient n is the sum of occ(pattern) over
/// every size-n permutation in the avoidance class.
struct popularity_series {
    std::string pattern;
    std::string avoid_class;
    bool disputed = false; // printed closed form known to disagree with enumeration
    series f;
};

/// Direct enumeration of a popularity series; the reference for everything
/// in this header.
inline series oracle_popularity(int order, const permutation& pattern, const pattern_set& avoid) {
    series s(order);
    for (int n = pattern.size(); n <= order; ++n) {
        bigint total = 0;
        enumerate_avoiders(n, avoid, [&](const permutation& sigma) { total += occurrences(sigma, pattern); });
        s[n] = total;
    }
    return s;
}

namespace detail {

inline series one_minus_2tc(int order) {
    series c = series::catalan(order);
    series one(order);
    one[0] = 1;
    return one - c.shift(1) - c.shift(1);
}

} // namespace detail

/// Popularity of 12 over the 132-avoiders: t^2 C^3 / (1 - 2 t C)^2,
/// C the Catalan series. Starts 0, 0, 1, 7, 37, ...
inline popularity_series f12(int order) {
    series c = series::catalan(order);
    series den = detail::one_minus_2tc(order);
    popularity_series p;
    p.pattern = "12";
    p.avoid_class = "132";
    p.f = (c * c * c).shift(2) / (den * den);
    return p;
}

/// Popularity of 12...m over the 132-avoiders, by the promotion step
/// F_m = F_{m-1} * t C / (1 - 2 t C) from F_2 = f12.
inline popularity_series f_incr(int order, int m) {
    if (m < 2) throw std::invalid_argument("f_incr: m must be at least 2");
    series step = series::catalan(order).shift(1) / detail::one_minus_2tc(order);
    popularity_series p = f12(order);
    for (int j = 3; j <= m; ++j) p.f = p.f * step;
    p.pattern = permutation::identity(m).str();
    return p;
}

/// Popularity of 12 over the 123-avoiders by direct enumeration:
/// 0, 0, 1, 6, 29, ... This is the seed for the hook chain below.
inline popularity_series g12_oracle(int order) {
    popularity_series p;
    p.pattern = "12";
    p.avoid_class = "123";
    p.f = oracle_popularity(order, permutation::parse("12"), {permutation::parse("123")});
    return p;
}

/// The closed form t C^2 / (1 - 2 t C) as printed for the 12-over-123
/// popularity; it starts 0, 1, 4, 15, ... and disagrees with enumeration
/// from n = 1 on, so it is carried as data but flagged disputed.
inline popularity_series g12_printed(int order) {
    series c = series::catalan(order);
    popularity_series p;
    p.pattern = "12";
    p.avoid_class = "123";
    p.disputed = true;
    p.f = (c * c).shift(1) / detail::one_minus_2tc(order);
    return p;
}

/// Popularity of the hook 1 m (m-1) ... 2 over the 123-avoiders, by the
/// same promotion step G_m = G_{m-1} * t C / (1 - 2 t C). The seed defaults
/// to the enumerated G_2; pass g12_printed(order).f to see where the
/// printed variant leads instead.
inline popularity_series g_desc(int order, int m, const series& g12_seed) {
    if (m < 2) throw std::invalid_argument("g_desc: m must be at least 2");
    series step = series::catalan(order).shift(1) / detail::one_minus_2tc(order);
    popularity_series p;
    p.avoid_class = "123";
    p.f = g12_seed;
    for (int j = 3; j <= m; ++j) p.f = p.f * step;
    std::vector<int> hook{1};
    for (int x = m; x >= 2; --x) hook.push_back(x);
    p.pattern = m == 2 ? "12" : permutation::from_one_line(hook).str();
    return p;
}

inline popularity_series g_desc(int order, int m) {
    return g_desc(order, m, g12_oracle(order).f);
}

/// Total occurrences read off a joint-distribution table: the formal
/// derivative in one tracked variable, evaluated with all variables at 1.
inline series popularity_from_table(const family_table& t, int var) {
    if (var < 0 || var >= t.arity()) throw std::out_of_range("popularity_from_table: variable index out of range");
    return series_from_family(t, [var](const multipoly& p) { return p.weighted_exponent_sum(var); });
}

inline series popularity_from_table(const family_table& t, const std::string& var_name) {
    auto it = std::find(t.vars.begin(), t.vars.end(), var_name);
    if (it == t.vars.end())
        throw std::invalid_argument("popularity_from_table: no variable named '" + var_name + "'");
    return popularity_from_table(t, static_cast<int>(it - t.vars.begin()));
}

/// Rows n,f with a header line.
inline std::string to_csv(const popularity_series& p) {
    std::string out = "n,f\n";
    for (int n = 0; n <= p.f.order(); ++n)
        out += std::to_string(n) + "," + p.f[n].str() + "\n";
    return out;
}

} // namespace patternlab
