#pragma once

#include <patternlab/bigint.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patternlab {

/// A permutation of {1..n} in one-line notation. Values are stored 0-based
/// internally; all text I/O is 1-based. Text form: a space-free digit string
/// for n <= 9, comma-separated values otherwise (e.g. "8,6,7,9,4,3,2,5,1").
class permutation {
  public:
    permutation() = default;

    /// From 1-based one-line values; must be a rearrangement of 1..n.
    static permutation from_one_line(const std::vector<int>& vals) {
        permutation p;
        p.v_.reserve(vals.size());
        for (int x : vals) p.v_.push_back(x - 1);
        p.validate();
        return p;
    }

    static permutation identity(int n) {
        permutation p;
        p.v_.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p.v_[static_cast<size_t>(i)] = i;
        return p;
    }

    static permutation parse(std::string_view text) {
        std::vector<int> vals;
        if (text.find(',') != std::string_view::npos) {
            size_t pos = 0;
            while (pos <= text.size()) {
                size_t comma = text.find(',', pos);
                std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
                vals.push_back(parse_value(tok));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        } else {
            for (size_t i = 0; i < text.size(); ++i) {
                char c = text[i];
                if (c < '1' || c > '9')
                    throw std::invalid_argument("invalid permutation token '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
                vals.push_back(c - '0');
            }
        }
        if (vals.empty()) throw std::invalid_argument("empty permutation text");
        return from_one_line(vals);
    }

    std::string str() const {
        std::string out;
        if (size() <= 9) {
            for (int x : v_) out += static_cast<char>('1' + x);
        } else {
            for (size_t i = 0; i < v_.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v_[i] + 1);
            }
        }
        return out;
    }

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    /// 0-based value at 0-based position.
    int operator[](int pos) const { return v_.at(static_cast<size_t>(pos)); }
    const std::vector<int>& values() const { return v_; }

    bool operator==(const permutation& o) const { return v_ == o.v_; }
    bool operator!=(const permutation& o) const { return v_ != o.v_; }
    bool operator<(const permutation& o) const { return v_ < o.v_; }

    /// Position (0-based) of the 0-based value v.
    int position_of(int v) const {
        auto it = std::find(v_.begin(), v_.end(), v);
        if (it == v_.end()) throw std::out_of_range("permutation::position_of: no such value");
        return static_cast<int>(it - v_.begin());
    }

    friend permutation reduce(const std::vector<int>& word);
    friend permutation direct_sum(const permutation& a, const permutation& b);
    friend permutation skew_sum(const permutation& a, const permutation& b);

  private:
    void validate() const {
        int n = size();
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (int x : v_) {
            if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
                throw std::invalid_argument("one-line values must be a rearrangement of 1.." + std::to_string(n));
            seen[static_cast<size_t>(x)] = true;
        }
    }

    static int parse_value(std::string_view tok) {
        if (tok.empty()) throw std::invalid_argument("invalid permutation token '' (empty between commas)");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("invalid permutation token '" + std::string(tok) + "'");
            v = v * 10 + (c - '0');
            if (v > 1000000) throw std::invalid_argument("permutation value out of range in token '" + std::string(tok) + "'");
        }
        return v;
    }

    std::vector<int> v_; // 0-based values
};

/// Order-isomorphic reduction: the unique permutation whose values compare
/// like the word's entries. Entries must be distinct.
inline permutation reduce(const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: word entries must be distinct");
    permutation p;
    p.v_.reserve(word.size());
    for (int x : word)
        p.v_.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()));
    return p;
}

namespace detail {

/// Count subsequences of sigma order-isomorphic to tau by position
/// backtracking; if `find_only`, stop at the first occurrence (count = 1).
inline long long count_occurrences_backtrack(const permutation& sigma, const permutation& tau, bool find_only) {
    const int n = sigma.size(), m = tau.size();
    if (m == 0 || m > n) return 0;
    std::vector<int> chosen(static_cast<size_t>(m)); // chosen values so far
    long long count = 0;
    std::function<bool(int, int)> go = [&](int depth, int start) -> bool {
        if (depth == m) {
            ++count;
            return find_only;
        }
        for (int pos = start; pos <= n - (m - depth); ++pos) {
            int v = sigma[pos];
            bool ok = true;
            for (int s = 0; s < depth && ok; ++s)
                ok = (chosen[static_cast<size_t>(s)] < v) == (tau[s] < tau[depth]);
            if (!ok) continue;
            chosen[static_cast<size_t>(depth)] = v;
            if (go(depth + 1, pos + 1)) return true;
        }
        return false;
    };
    go(0, 0);
    return count;
}

/// Count increasing subsequences of length m by dynamic programming:
/// asc[p] = number of increasing subsequences of the current length ending
/// at position p. Exact in bigint; returns long long when it fits.
inline bigint count_increasing(const permutation& sigma, int m) {
    const int n = sigma.size();
    if (m == 0 || m > n) return 0;
    std::vector<bigint> asc(static_cast<size_t>(n), 1);
    for (int len = 2; len <= m; ++len) {
        std::vector<bigint> nxt(static_cast<size_t>(n), 0);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < p; ++q)
                if (sigma[q] < sigma[p]) nxt[static_cast<size_t>(p)] += asc[static_cast<size_t>(q)];
        asc = std::move(nxt);
    }
    bigint total = 0;
    for (const bigint& x : asc) total += x;
    return total;
}

inline bool is_increasing(const permutation& p) {
    for (int i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) return false;
    return true;
}

} // namespace detail

/// Number of occurrences of the classical pattern tau in sigma. Monotone
/// increasing patterns use the DP fast path; everything else enumerates
/// position subsets with incremental pruning.
inline long long occurrences(const permutation& sigma, const permutation& tau) {
    if (tau.empty()) throw std::invalid_argument("occurrences: empty pattern");
    if (detail::is_increasing(tau)) {
        bigint c = detail::count_increasing(sigma, tau.size());
        if (c > bigint(INT64_MAX)) throw std::overflow_error("occurrence count overflows long long");
        return c.convert_to<long long>();
    }
    return detail::count_occurrences_backtrack(sigma, tau, false);
}

inline bool contains(const permutation& sigma, const permutation& tau) {
    if (tau.empty()) throw std::invalid_argument("contains: empty pattern");
    return detail::count_occurrences_backtrack(sigma, tau, true) > 0;
}

/// An ordered list of distinct patterns; the order is significant wherever a
/// pattern set fixes a variable order.
using pattern_set = std::vector<permutation>;

inline void check_pattern_set(const pattern_set& ps) {
    std::set<permutation> seen;
    for (const auto& p : ps) {
        if (p.empty()) throw std::invalid_argument("pattern set: empty pattern");
        if (!seen.insert(p).second)
            throw std::invalid_argument("pattern set: duplicate pattern " + p.str());
    }
}

inline bool avoids(const permutation& sigma, const pattern_set& patterns) {
    check_pattern_set(patterns);
    for (const auto& tau : patterns)
        if (contains(sigma, tau)) return false;
    return true;
}

// ---- symmetries -----------------------------------------------------------

enum class symmetry_action { reverse, complement, reverse_complement, inverse };

inline permutation reverse_of(const permutation& p) {
    std::vector<int> v(p.values().rbegin(), p.values().rend());
    for (int& x : v) ++x;
    return permutation::from_one_line(v);
}

inline permutation complement_of(const permutation& p) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(p.size()));
    for (int x : p.values()) v.push_back(p.size() - x);
    return permutation::from_one_line(v);
}

inline permutation inverse_of(const permutation& p) {
    std::vector<int> v(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) v[static_cast<size_t>(p[i])] = i + 1;
    return permutation::from_one_line(v);
}

inline permutation apply_symmetry(const permutation& p, symmetry_action a) {
    switch (a) {
        case symmetry_action::reverse: return reverse_of(p);
        case symmetry_action::complement: return complement_of(p);
        case symmetry_action::reverse_complement: return reverse_of(complement_of(p));
        case symmetry_action::inverse: return inverse_of(p);
    }
    throw std::logic_error("apply_symmetry: bad action");
}

// ---- sums and decompositions ----------------------------------------------

/// a (+) b: a on values 1..|a|, b shifted above on the right.
inline permutation direct_sum(const permutation& a, const permutation& b) {
    permutation r;
    r.v_ = a.values();
    for (int x : b.values()) r.v_.push_back(x + a.size());
    return r;
}

/// a (-) b: a shifted above |b| on the left, b on values 1..|b| on the right.
inline permutation skew_sum(const permutation& a, const permutation& b) {
    permutation r;
    r.v_.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int x : a.values()) r.v_.push_back(x + b.size());
    r.v_.insert(r.v_.end(), b.values().begin(), b.values().end());
    return r;
}

/// All ways to write gamma = pi (-) rho with pi, rho nonempty, ordered by
/// |pi| ascending. A split after position i works iff every value in the
/// prefix exceeds every value in the suffix.
inline std::vector<std::pair<permutation, permutation>> skew_decompositions(const permutation& gamma) {
    std::vector<std::pair<permutation, permutation>> out;
    const int n = gamma.size();
    int prefix_min = n;
    std::vector<int> suffix_max(static_cast<size_t>(n) + 1, -1);
    for (int i = n - 1; i >= 0; --i)
        suffix_max[static_cast<size_t>(i)] = std::max(suffix_max[static_cast<size_t>(i) + 1], gamma[i]);
    for (int cut = 1; cut < n; ++cut) {
        prefix_min = std::min(prefix_min, gamma[cut - 1]);
        if (prefix_min > suffix_max[static_cast<size_t>(cut)]) {
            std::vector<int> left(gamma.values().begin(), gamma.values().begin() + cut);
            std::vector<int> right(gamma.values().begin() + cut, gamma.values().end());
            out.emplace_back(reduce(left), reduce(right));
        }
    }
    return out;
}

// ---- statistics ------------------------------------------------------------

struct perm_stats {
    long long inv = 0;    // inversions: pairs i<j with sigma_i > sigma_j
    long long coinv = 0;  // non-inversions: inv + coinv = n(n-1)/2
    int lrmin = 0;        // left-to-right minima
    long long linv = 0;   // pairs (a, b): a a left-to-right minimum value,
                          // b not one, b < a (positions then automatic)
};

/// True at position i iff sigma_i is a left-to-right minimum.
inline std::vector<bool> lr_minimum_mask(const permutation& p) {
    std::vector<bool> mask(static_cast<size_t>(p.size()), false);
    int m = p.size();
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] < m) {
            m = p[i];
            mask[static_cast<size_t>(i)] = true;
        }
    }
    return mask;
}

inline perm_stats stats(const permutation& p) {
    perm_stats s;
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ++(p[i] > p[j] ? s.inv : s.coinv);
    auto mask = lr_minimum_mask(p);
    std::vector<bool> is_min_value(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i)
        if (mask[static_cast<size_t>(i)]) {
            ++s.lrmin;
            is_min_value[static_cast<size_t>(p[i])] = true;
        }
    // If sigma_i is a left-to-right minimum and b < sigma_i is not one, the
    // position of b lies right of i, so the value condition already gives an
    // inversion; counting value pairs is therefore enough.
    for (int a = 0; a < n; ++a) {
        if (!is_min_value[static_cast<size_t>(a)]) continue;
        for (int b = 0; b < a; ++b)
            if (!is_min_value[static_cast<size_t>(b)]) ++s.linv;
    }
    return s;
}

// ---- structure of 132-avoiders ---------------------------------------------

struct split_parts {
    permutation left;  // reduction of the prefix before the maximum
    int k = 0;         // 1-based position of the maximum value n
    permutation right; // reduction of the suffix after the maximum
};

/// Split sigma in S_n(132) around its maximum: every prefix value must
/// exceed every suffix value, which holds exactly when sigma avoids 132.
inline split_parts max_split(const permutation& sigma) {
    if (sigma.empty()) throw std::invalid_argument("max_split: empty permutation");
    static const permutation pat132 = permutation::parse("132");
    if (contains(sigma, pat132))
        throw std::invalid_argument("max_split: input contains 132 at " + sigma.str());
    split_parts r;
    int pos = sigma.position_of(sigma.size() - 1);
    r.k = pos + 1;
    std::vector<int> left(sigma.values().begin(), sigma.values().begin() + pos);
    std::vector<int> right(sigma.values().begin() + pos + 1, sigma.values().end());
    r.left = reduce(left);
    r.right = reduce(right);
    return r;
}

// ---- avoider enumeration ----------------------------------------------------

namespace detail {

/// Does any pattern occur in the prefix using its last position? Earlier
/// prefixes were clean, so this is the only new way a pattern can appear.
inline bool prefix_hits_pattern(const std::vector<int>& prefix, const permutation& tau) {
    const int len = static_cast<int>(prefix.size());
    const int m = tau.size();
    if (m > len) return false;
    const int last = prefix[static_cast<size_t>(len) - 1];
    std::vector<int> chosen(static_cast<size_t>(m));
    chosen[static_cast<size_t>(m) - 1] = last;
    if (m == 1) return true;
    std::function<bool(int, int)> go = [&](int depth, int start) -> bool {
        if (depth == m - 1) return true;
        for (int pos = start; pos <= len - 1 - (m - 1 - depth); ++pos) {
            int v = prefix[static_cast<size_t>(pos)];
            bool ok = (v < last) == (tau[depth] < tau[m - 1]);
            for (int s = 0; s < depth && ok; ++s)
                ok = (chosen[static_cast<size_t>(s)] < v) == (tau[s] < tau[depth]);
            if (!ok) continue;
            chosen[static_cast<size_t>(depth)] = v;
            if (go(depth + 1, pos + 1)) return true;
        }
        return false;
    };
    return go(0, 0);
}

} // namespace detail

/// Visit every sigma in S_n avoiding all patterns, in lexicographic order of
/// one-line notation. Backtracking over positions; a branch dies as soon as
/// its prefix contains a pattern, so subtrees of non-avoiders are never built.
inline void enumerate_avoiders(int n, const pattern_set& patterns,
                               const std::function<void(const permutation&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_avoiders: negative n");
    check_pattern_set(patterns);
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::function<void()> go = [&]() {
        if (static_cast<int>(prefix.size()) == n) {
            std::vector<int> vals = prefix;
            for (int& v : vals) ++v;
            visit(permutation::from_one_line(vals));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            prefix.push_back(v);
            used[static_cast<size_t>(v)] = true;
            bool dead = false;
            for (const auto& tau : patterns)
                if (detail::prefix_hits_pattern(prefix, tau)) { dead = true; break; }
            if (!dead) go();
            used[static_cast<size_t>(v)] = false;
            prefix.pop_back();
        }
    };
    go();
}

inline std::vector<permutation> list_avoiders(int n, const pattern_set& patterns) {
    std::vector<permutation> out;
    enumerate_avoiders(n, patterns, [&](const permutation& p) { out.push_back(p); });
    return out;
}

} // namespace patternlab
