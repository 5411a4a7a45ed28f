#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patternlab {

/// Exact integer type used for all polynomial/series coefficients.
using bigint = boost::multiprecision::cpp_int;

/// Exponent component type. Exponents stay well below 2^31 at desk scale;
/// every narrowing from intermediate 64-bit arithmetic is range-checked.
using exp_t = std::int32_t;

inline exp_t checked_exp(long long v, const char* context = "exponent") {
    if (v < INT32_MIN || v > INT32_MAX)
        throw std::overflow_error(std::string(context) + " overflows 32-bit exponent range: " + std::to_string(v));
    return static_cast<exp_t>(v);
}

/// n*(n-1)/2 with overflow check; accepts n >= 0.
inline long long binom2(long long n) {
    if (n < 0) return 0;
    if (n > 3000000000LL) throw std::overflow_error("binom2 argument too large");
    return n * (n - 1) / 2;
}

/// Small binomial coefficient C(n, k) as long long (desk scale).
inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Fibonacci numbers with fib(1) = fib(2) = 1.
inline bigint fibonacci(int n) {
    if (n <= 0) return 0;
    bigint a = 0, b = 1;
    for (int i = 1; i < n; ++i) {
        bigint c = a + b;
        a = b;
        b = c;
    }
    return b;
}

/// Catalan number C_n.
inline bigint catalan_number(int n) {
    bigint num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= 2 * (2 * i + 1);
        den *= i + 2;
    }
    return num / den;
}

} // namespace patternlab
