#pragma once

// Exact big-integer and rational arithmetic plus the few floating helpers the
// bound evaluators need (natural log of huge integers, log-sum-exp).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "orbitcount/errors.hpp"

namespace orbitcount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

inline BigInt int_pow(BigInt base, unsigned long long exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1ULL) r *= base;
        base *= base;
        exp >>= 1ULL;
    }
    return r;
}

// Natural log of a positive big integer. Large values are split into a 512-bit
// mantissa and a power of two so the double conversion never overflows; the
// result carries relative error well below 1e-12.
inline double ln_bigint(const BigInt& x) {
    if (x <= 0) throw std::domain_error("ln_bigint: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 512) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 512;
    const BigInt mantissa = x >> shift;
    return std::log(mantissa.convert_to<double>()) +
           static_cast<double>(shift) * std::numbers::ln2;
}

// Natural log of a positive rational; returns -infinity for zero.
inline double ln_bigrat(const BigRat& x) {
    if (x < 0) throw std::domain_error("ln_bigrat: argument must be nonnegative");
    if (x == 0) return -std::numeric_limits<double>::infinity();
    return ln_bigint(boost::multiprecision::numerator(x)) -
           ln_bigint(boost::multiprecision::denominator(x));
}

inline double to_double(const BigRat& x) {
    return x.convert_to<double>();
}

// log(sum(exp(t))) over the given terms; -infinity entries contribute nothing.
inline double log_sum_exp(const std::vector<double>& ln_terms) {
    double hi = -std::numeric_limits<double>::infinity();
    for (double t : ln_terms)
        if (t > hi) hi = t;
    if (!std::isfinite(hi)) return hi;
    double acc = 0.0;
    for (double t : ln_terms)
        if (std::isfinite(t)) acc += std::exp(t - hi);
    return hi + std::log(acc);
}

} // namespace orbitcount
