#pragma once

#include <patternlab/permutation.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace patternlab {

/// Lattice path of n down-steps (D) and n right-steps (R) in an n x n grid,
/// read from the top-left corner: D increments the row coordinate y, R
/// increments the column coordinate x, and every prefix satisfies y >= x
/// (the path stays weakly below the main diagonal in this orientation).
/// Steps are held as a packed bit sequence; text form is the literal D/R
/// string.
class dyck_path {
  public:
    dyck_path() = default;

    static dyck_path from_steps(std::vector<bool> steps) {
        dyck_path p;
        p.steps_ = std::move(steps);
        p.validate();
        return p;
    }

    static dyck_path parse(std::string_view text) {
        std::vector<bool> steps;
        steps.reserve(text.size());
        for (char c : text) {
            if (c == 'D') steps.push_back(false);
            else if (c == 'R') steps.push_back(true);
            else throw std::invalid_argument("invalid path step '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
        return from_steps(std::move(steps));
    }

    std::string str() const {
        std::string out;
        out.reserve(steps_.size());
        for (bool s : steps_) out += s ? 'R' : 'D';
        return out;
    }

    /// Semilength n.
    int size() const { return static_cast<int>(steps_.size()) / 2; }
    int step_count() const { return static_cast<int>(steps_.size()); }
    bool is_right(int i) const { return steps_.at(static_cast<size_t>(i)); }

    bool operator==(const dyck_path& o) const { return steps_ == o.steps_; }
    bool operator!=(const dyck_path& o) const { return !(*this == o); }

    /// Height profile: heights[c] = y coordinate when the c-th right-step is
    /// taken (1-based c), i.e. the number of down-steps before that R. The
    /// c-th column's cells between the path and the diagonal number
    /// heights[c] - c, which is also the diagonal index of a peak in that
    /// column.
    std::vector<int> column_heights() const {
        std::vector<int> h;
        h.reserve(static_cast<size_t>(size()));
        int y = 0;
        for (bool s : steps_) {
            if (s) h.push_back(y);
            else ++y;
        }
        return h;
    }

    /// peak_mask[c-1] is true iff the c-th right-step is preceded by a
    /// down-step (a DR corner).
    std::vector<bool> peak_mask() const {
        std::vector<bool> mask;
        mask.reserve(static_cast<size_t>(size()));
        for (size_t i = 0; i < steps_.size(); ++i)
            if (steps_[i]) mask.push_back(i > 0 && !steps_[i - 1]);
        return mask;
    }

  private:
    void validate() const {
        long long d = 0, r = 0;
        for (bool s : steps_) {
            ++(s ? r : d);
            if (r > d) throw std::invalid_argument("path prefix has more right-steps than down-steps: " + str());
        }
        if (d != r) throw std::invalid_argument("path must have equally many down- and right-steps: " + str());
    }

    std::vector<bool> steps_; // false = D (down), true = R (right)
};

struct dyck_stats {
    int ret = 0;                        // column index of the first diagonal touch
    long long area = 0;                 // cells strictly between path and diagonal
    long long coarea = 0;               // n^2 minus full columns: sum of n - height
    std::map<int, long long> diag_peaks; // diagonal index d -> number of DR corners there
};

/// ret, area, coarea and the per-diagonal peak census in one pass.
/// After the c-th right-step the position is (x, y) = (c, heights[c]);
/// the first return is the smallest c with heights[c] = c. A DR corner in
/// column c sits on diagonal d = heights[c] - c = y - x - 1 measured at the
/// corner lattice point.
inline dyck_stats path_stats(const dyck_path& p) {
    dyck_stats s;
    const int n = p.size();
    auto heights = p.column_heights();
    auto peaks = p.peak_mask();
    for (int c = 1; c <= n; ++c) {
        int y = heights[static_cast<size_t>(c) - 1];
        s.area += y - c;
        s.coarea += n - y;
        if (s.ret == 0 && y == c) s.ret = c;
        if (peaks[static_cast<size_t>(c) - 1]) ++s.diag_peaks[y - c];
    }
    return s;
}

namespace detail {

/// Shared forward construction: column c gets height n - min(sigma_1..sigma_c) + 1
/// (1-based values), so the height profile is the reflected running-minimum
/// staircase of sigma.
inline dyck_path staircase_path(const permutation& sigma) {
    const int n = sigma.size();
    std::vector<bool> steps;
    steps.reserve(2 * static_cast<size_t>(n));
    int prev_y = 0, run_min = n;
    for (int c = 0; c < n; ++c) {
        run_min = std::min(run_min, sigma[c]);
        int y = n - run_min;
        for (int i = prev_y; i < y; ++i) steps.push_back(false);
        steps.push_back(true);
        prev_y = y;
    }
    return dyck_path::from_steps(std::move(steps));
}

} // namespace detail

/// Bijection from S_n(132) onto paths: the height profile records the
/// running minima of sigma. Throws if sigma contains 132.
inline dyck_path phi(const permutation& sigma) {
    static const permutation pat = permutation::parse("132");
    if (contains(sigma, pat))
        throw std::invalid_argument("phi: input contains 132: " + sigma.str());
    return detail::staircase_path(sigma);
}

/// Bijection from S_n(123) onto paths, same height profile construction.
/// Throws if sigma contains 123.
inline dyck_path psi(const permutation& sigma) {
    static const permutation pat = permutation::parse("123");
    if (contains(sigma, pat))
        throw std::invalid_argument("psi: input contains 123: " + sigma.str());
    return detail::staircase_path(sigma);
}

namespace detail {

/// Inverse of the staircase construction. Peak columns carry the
/// left-to-right minima, forced to n + 1 - height. A non-peak column keeps
/// the running minimum, so its value exceeds it; the avoidance class decides
/// which admissible value to place: the smallest unused one (132 side, the
/// segment above a minimum ascends) or the largest unused one (123 side,
/// the non-minima descend).
inline permutation staircase_inverse(const dyck_path& p, bool take_smallest) {
    const int n = p.size();
    auto heights = p.column_heights();
    auto peaks = p.peak_mask();
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c) {
        int y = heights[static_cast<size_t>(c) - 1];
        int run_min = n + 1 - y;
        int v = 0;
        if (peaks[static_cast<size_t>(c) - 1]) {
            v = run_min;
        } else if (take_smallest) {
            for (v = run_min + 1; v <= n && used[static_cast<size_t>(v)]; ++v) {}
        } else {
            for (v = n; v > run_min && used[static_cast<size_t>(v)]; --v) {}
        }
        if (v <= 0 || v > n || used[static_cast<size_t>(v)])
            throw std::logic_error("staircase_inverse: no admissible value, implementation fault");
        used[static_cast<size_t>(v)] = true;
        vals.push_back(v);
    }
    return permutation::from_one_line(vals);
}

} // namespace detail

inline permutation phi_inv(const dyck_path& p) { return detail::staircase_inverse(p, true); }
inline permutation psi_inv(const dyck_path& p) { return detail::staircase_inverse(p, false); }

/// Decompose P = D P1 R P2 around the first return to the diagonal:
/// with r = ret(P), P1 is steps 2..2r-1 (1-based, semilength r-1) and P2 is
/// steps 2r+1..2n (semilength n-r). Matches splitting a 132-avoider around
/// its maximum: phi(A n B) = D phi(A) R phi(B).
inline std::pair<dyck_path, dyck_path> first_return_split(const dyck_path& p) {
    if (p.size() == 0) throw std::invalid_argument("first_return_split: empty path");
    const int r = path_stats(p).ret;
    std::vector<bool> s1, s2;
    for (int i = 1; i <= 2 * r - 2; ++i) s1.push_back(p.is_right(i));
    for (int i = 2 * r; i < p.step_count(); ++i) s2.push_back(p.is_right(i));
    return {dyck_path::from_steps(std::move(s1)), dyck_path::from_steps(std::move(s2))};
}

/// All paths of semilength n, in lexicographic step order with D < R.
inline std::vector<dyck_path> list_paths(int n) {
    std::vector<dyck_path> out;
    std::vector<bool> steps;
    std::function<void(int, int)> go = [&](int d, int r) {
        if (d == n && r == n) {
            out.push_back(dyck_path::from_steps(steps));
            return;
        }
        if (d < n) {
            steps.push_back(false);
            go(d + 1, r);
            steps.pop_back();
        }
        if (r < d) {
            steps.push_back(true);
            go(d, r + 1);
            steps.pop_back();
        }
    };
    go(0, 0);
    return out;
}

} // namespace patternlab
