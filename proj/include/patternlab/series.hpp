#pragma once

#include <patternlab/bigint.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace patternlab {

/// Truncated integer power series in one variable t: coefficients for
/// t^0 .. t^order are stored, everything above the order is discarded.
/// Arithmetic never reads beyond the stored window.
class series {
  public:
    series() = default;
    explicit series(int order) : c_(static_cast<size_t>(order) + 1, 0) {
        if (order < 0) throw std::invalid_argument("series: negative order");
    }

    static series from_coeffs(std::vector<bigint> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series: empty coefficient list");
        series s;
        s.c_ = std::move(coeffs);
        return s;
    }

    /// Catalan series 1 + t + 2t^2 + 5t^3 + ... by self-convolution
    /// C = 1 + t*C^2, computed coefficient by coefficient.
    static series catalan(int order) {
        series c(order);
        c.c_[0] = 1;
        for (int n = 1; n <= order; ++n) {
            bigint s = 0;
            for (int i = 0; i < n; ++i) s += c.c_[static_cast<size_t>(i)] * c.c_[static_cast<size_t>(n - 1 - i)];
            c.c_[static_cast<size_t>(n)] = s;
        }
        return c;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const bigint& operator[](int n) const { return c_.at(static_cast<size_t>(n)); }
    bigint& operator[](int n) { return c_.at(static_cast<size_t>(n)); }

    bool operator==(const series& o) const { return c_ == o.c_; }
    bool operator!=(const series& o) const { return !(*this == o); }

    friend series operator+(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
        return r;
    }

    friend series operator-(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
        return r;
    }

    friend series operator*(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            bigint s = 0;
            for (int i = 0; i <= n; ++i) s += a[i] * b[n - i];
            r[n] = s;
        }
        return r;
    }

    /// Quotient a / b, defined when b has unit constant term (+1 or -1);
    /// otherwise throws, since exact integer division is not available.
    friend series operator/(const series& a, const series& b) {
        if (b[0] != 1 && b[0] != -1)
            throw std::invalid_argument("series division requires unit constant term, got " + b[0].str());
        series q(std::min(a.order(), b.order()));
        for (int n = 0; n <= q.order(); ++n) {
            bigint s = a[n];
            for (int i = 1; i <= n; ++i) s -= b[i] * q[n - i];
            q[n] = b[0] == 1 ? s : -s;
        }
        return q;
    }

    /// Multiply by t^k (shift up, truncating at the order).
    series shift(int k) const {
        if (k < 0) throw std::invalid_argument("series::shift: negative shift");
        series r(order());
        for (int n = k; n <= order(); ++n) r[n] = c_[static_cast<size_t>(n - k)];
        return r;
    }

    series truncate(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("series::truncate: cannot extend");
        series r(new_order);
        for (int n = 0; n <= new_order; ++n) r[n] = c_[static_cast<size_t>(n)];
        return r;
    }

    std::string str() const {
        std::string out;
        for (int n = 0; n <= order(); ++n) {
            if (n) out += ", ";
            out += c_[static_cast<size_t>(n)].str();
        }
        return out;
    }

  private:
    std::vector<bigint> c_;
};

} // namespace patternlab
