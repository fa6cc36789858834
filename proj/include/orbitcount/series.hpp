#pragma once

// Exact generating functions for the invariant m-subsets and m-multisets of a
// permutation with a given cycle type. A permutation with j_k cycles of
// length k fixes a subset iff the subset is a union of cycles, so
//
//   invariant subsets:   prod_k (1 + t^k)^{j_k}
//   invariant multisets: prod_k (1 - t^k)^{-j_k}
//
// and the coefficient of t^m counts the fixed m-subsets (m-multisets).

#include <vector>

#include "orbitcount/numeric.hpp"
#include "orbitcount/perm.hpp"

namespace orbitcount {

// Dense polynomial with exact integer coefficients, truncated beyond a fixed
// degree cap.
class TruncatedIntSeries {
public:
    explicit TruncatedIntSeries(int degree_cap)
        : coeffs_(static_cast<std::size_t>(degree_cap) + 1) {
        if (degree_cap < 0)
            throw std::invalid_argument("TruncatedIntSeries: negative degree cap");
    }

    static TruncatedIntSeries one(int degree_cap) {
        TruncatedIntSeries s(degree_cap);
        s.coeffs_[0] = 1;
        return s;
    }

    int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& operator[](int m) const {
        if (m < 0 || m > degree_cap())
            throw std::out_of_range("TruncatedIntSeries: index out of range");
        return coeffs_[static_cast<std::size_t>(m)];
    }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    // Multiplies in place by sum_q factor[q] * t^(stride*q), truncating.
    void multiply_by_aligned(const std::vector<BigInt>& factor, int stride) {
        const int cap = degree_cap();
        std::vector<BigInt> out(coeffs_.size());
        for (int d = 0; d <= cap; ++d) {
            if (coeffs_[static_cast<std::size_t>(d)] == 0) continue;
            for (std::size_t q = 0; q < factor.size(); ++q) {
                const int shift = d + stride * static_cast<int>(q);
                if (shift > cap) break;
                out[static_cast<std::size_t>(shift)] +=
                    coeffs_[static_cast<std::size_t>(d)] * factor[q];
            }
        }
        coeffs_ = std::move(out);
    }

private:
    std::vector<BigInt> coeffs_;
};

// prod_k (1 + t^k)^{j_k} truncated at degree_cap; requires degree_cap <= n
// since higher coefficients are identically zero.
inline TruncatedIntSeries subset_gf(const CycleType& ct, int degree_cap) {
    if (degree_cap > ct.n)
        throw std::invalid_argument("subset_gf: degree cap exceeds the ground set");
    TruncatedIntSeries series = TruncatedIntSeries::one(degree_cap);
    for (auto& [k, j] : ct.counts) {
        std::vector<BigInt> factor;
        for (int q = 0; q * k <= degree_cap; ++q) factor.push_back(binomial(j, q));
        series.multiply_by_aligned(factor, k);
    }
    return series;
}

// prod_k (1 - t^k)^{-j_k} truncated at degree_cap, using the expansion
// (1 - t^k)^{-j} = sum_q C(j - 1 + q, q) t^{kq}.
inline TruncatedIntSeries multiset_gf(const CycleType& ct, int degree_cap) {
    TruncatedIntSeries series = TruncatedIntSeries::one(degree_cap);
    for (auto& [k, j] : ct.counts) {
        std::vector<BigInt> factor;
        for (int q = 0; q * k <= degree_cap; ++q) factor.push_back(binomial(j - 1 + q, q));
        series.multiply_by_aligned(factor, k);
    }
    return series;
}

// Number of m-subsets fixed by a permutation of the given cycle type.
inline BigInt alpha_m(const CycleType& ct, int m) {
    if (m < 0 || m > ct.n)
        throw std::out_of_range("alpha_m: m outside [0, n]");
    return subset_gf(ct, m)[m];
}

// Number of m-multisets fixed by a permutation of the given cycle type.
inline BigInt alpha_multiset(const CycleType& ct, int m) {
    if (m < 0)
        throw std::out_of_range("alpha_multiset: negative m");
    return multiset_gf(ct, m)[m];
}

// Sum over all m of alpha_m: every union of cycles is invariant, so the total
// is 2^(number of cycles).
inline BigInt total_invariant_subsets(const CycleType& ct) {
    return int_pow(BigInt(2), static_cast<unsigned long long>(ct.cycle_count()));
}

// log2 upper bound for the total: a permutation moving beta points has at most
// n - beta/2 cycles.
inline double invariant_total_log2_bound(const CycleType& ct) {
    return static_cast<double>(ct.n) - static_cast<double>(support_size(ct)) / 2.0;
}

} // namespace orbitcount
