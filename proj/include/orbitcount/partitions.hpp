#pragma once

// Integer partitions viewed as cycle types of the symmetric group, together
// with conjugacy class sizes and canonical representatives.

#include <utility>
#include <vector>

#include "orbitcount/numeric.hpp"
#include "orbitcount/perm.hpp"

namespace orbitcount {

// Calls fn(parts) for every partition of n, parts listed in nonincreasing
// order. Enumeration order is deterministic (descending lexicographic).
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
    std::vector<int> parts;
    // Recursive descent: extend with parts no larger than the previous one.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            fn(const_cast<const std::vector<int>&>(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

inline CycleType cycle_type_from_parts(int n, const std::vector<int>& parts) {
    CycleType ct;
    ct.n = n;
    for (int p : parts) ++ct.counts[p];
    return ct;
}

// Size of the conjugacy class of S_n with the given cycle type:
// n! / prod_k (k^{j_k} * j_k!).
inline BigInt symmetric_class_size(const CycleType& ct) {
    BigInt denom = 1;
    for (auto& [k, j] : ct.counts)
        denom *= int_pow(BigInt(k), static_cast<unsigned long long>(j)) * factorial(j);
    return factorial(ct.n) / denom;
}

// All cycle types of S_n with their class sizes; sizes sum to n!.
inline std::vector<std::pair<CycleType, BigInt>> symmetric_class_reps(int n) {
    std::vector<std::pair<CycleType, BigInt>> classes;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        CycleType ct = cycle_type_from_parts(n, parts);
        BigInt size = symmetric_class_size(ct);
        classes.emplace_back(std::move(ct), std::move(size));
    });
    return classes;
}

// Canonical representative: cycles laid out consecutively on 0..n-1, longest
// first.
inline Permutation class_representative(const CycleType& ct) {
    std::vector<Point> img(static_cast<std::size_t>(ct.n));
    Point next = 0;
    for (auto it = ct.counts.rbegin(); it != ct.counts.rend(); ++it) {
        auto [k, j] = *it;
        for (int rep = 0; rep < j; ++rep) {
            for (int s = 0; s < k; ++s)
                img[next + static_cast<Point>(s)] =
                    next + static_cast<Point>((s + 1) % k);
            next += static_cast<Point>(k);
        }
    }
    return Permutation::from_image(std::move(img));
}

} // namespace orbitcount
