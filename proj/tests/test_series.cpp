#include <catch2/catch_amalgamated.hpp>

#include "orbitcount/bounds.hpp"
#include "orbitcount/partitions.hpp"
#include "orbitcount/series.hpp"

#include "oracle.hpp"

using namespace orbitcount;

namespace {

std::vector<BigInt> coeffs(const TruncatedIntSeries& s) { return s.coefficients(); }

} // namespace

TEST_CASE("subset generating function for simple cycle types") {
    const CycleType transposition = cycle_type(parse_permutation("(0 1)", 3));
    CHECK(coeffs(subset_gf(transposition, 3)) ==
          std::vector<BigInt>{1, 1, 1, 1}); // (1+t)(1+t^2)

    const CycleType three_cycle = cycle_type(parse_permutation("(0 1 2)", 3));
    CHECK(coeffs(subset_gf(three_cycle, 3)) ==
          std::vector<BigInt>{1, 0, 0, 1}); // 1 + t^3

    const CycleType identity5 = cycle_type(Permutation(5));
    CHECK(subset_gf(identity5, 5)[2] == 10); // C(5,2)
}

TEST_CASE("subset generating function rejects caps beyond the ground set") {
    CHECK_THROWS_AS(subset_gf(cycle_type(Permutation(3)), 4), std::invalid_argument);
    CHECK_THROWS_AS(alpha_m(cycle_type(Permutation(3)), 4), std::out_of_range);
    CHECK_THROWS_AS(alpha_m(cycle_type(Permutation(3)), -1), std::out_of_range);
}

TEST_CASE("multiset generating function for simple cycle types") {
    const CycleType transposition = cycle_type(parse_permutation("(0 1)", 3));
    // 1/((1-t)(1-t^2)): constant on the 2-cycle, free on the fixed point.
    CHECK(coeffs(multiset_gf(transposition, 2)) == std::vector<BigInt>{1, 1, 2});

    // A 3-cycle admits only multiplicity vectors constant on all three points.
    const CycleType three_cycle = cycle_type(parse_permutation("(0 1 2)", 3));
    const Permutation sigma = parse_permutation("(0 1 2)", 3);
    for (int m = 0; m <= 3; ++m)
        CHECK(multiset_gf(three_cycle, 3)[m] == oracle::count_invariant_multisets(sigma, m));
    CHECK(coeffs(multiset_gf(three_cycle, 3)) == std::vector<BigInt>{1, 0, 0, 1});
}

TEST_CASE("fixed subset counts match exhaustive enumeration") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& sigma : oracle::all_permutations(n)) {
            const CycleType ct = cycle_type(sigma);
            for (int m = 0; m <= n; ++m)
                CHECK(alpha_m(ct, m) == oracle::count_invariant_subsets(sigma, m));
        }
}

TEST_CASE("fixed multiset counts match exhaustive enumeration") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& sigma : oracle::all_permutations(n)) {
            const CycleType ct = cycle_type(sigma);
            for (int m = 0; m <= n + 3; ++m)
                CHECK(alpha_multiset(ct, m) == oracle::count_invariant_multisets(sigma, m));
        }
}

TEST_CASE("pair counts follow the fixed-point and 2-cycle census") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n)) {
            const BigInt expected =
                binomial(ct.fixed_points(), 2) + ct.multiplicity(2);
            CHECK(alpha_m(ct, 2) == expected);
        }
}

TEST_CASE("subset counts are palindromic in m") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n))
            for (int m = 0; m <= n; ++m)
                CHECK(alpha_m(ct, m) == alpha_m(ct, n - m));
}

TEST_CASE("total invariant subsets equal two to the cycle count") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n)) {
            BigInt total = 0;
            for (int m = 0; m <= n; ++m) total += alpha_m(ct, m);
            CHECK(total == total_invariant_subsets(ct));
            CHECK(total == int_pow(BigInt(2), static_cast<unsigned long long>(ct.cycle_count())));
        }
}

TEST_CASE("cycle count bound holds exactly in the exponent") {
    // 2^cycles <= 2^(n - beta/2), i.e. 2*cycles <= 2n - beta as integers.
    for (int n = 1; n <= 12; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n)) {
            CHECK(2 * ct.cycle_count() <= 2 * ct.n - support_size(ct));
            const double log2_total =
                static_cast<double>(ct.cycle_count()); // log2(2^cycles)
            CHECK(log2_total <= invariant_total_log2_bound(ct) + 1e-12);
        }
    const CycleType identity4 = cycle_type(Permutation(4));
    CHECK(invariant_total_log2_bound(identity4) == 4.0);
}

TEST_CASE("per-element subset bound dominates every cycle type") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n)) {
            const int beta = support_size(ct);
            for (int m = 1; m < n; ++m) {
                const BigInt count = alpha_m(ct, m);
                if (count == 0) continue;
                const BoundParams params(n, m, ActionKind::Subsets);
                CHECK(ln_bigint(count) <= element_fix_bound(beta, params) + 1e-9);
            }
        }
}

TEST_CASE("per-element multiset bound dominates every cycle type") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& [ct, size] : symmetric_class_reps(n)) {
            const int beta = support_size(ct);
            for (int m = 1; m <= 2 * n; ++m) {
                const BigInt count = alpha_multiset(ct, m);
                if (count == 0) continue;
                const BoundParams params(n, m, ActionKind::Multisets);
                CHECK(ln_bigint(count) <= element_fix_bound(beta, params) + 1e-9);
            }
        }
}

TEST_CASE("big integer logarithm is accurate on large factorials") {
    // ln(100!) = sum ln k, accumulated in long double as reference.
    long double ref = 0.0L;
    for (int k = 2; k <= 100; ++k) ref += std::log(static_cast<long double>(k));
    CHECK(std::fabs(ln_bigint(factorial(100)) - static_cast<double>(ref)) < 1e-9);

    const BigInt huge = int_pow(BigInt(2), 100000);
    CHECK(ln_bigint(huge) == Catch::Approx(100000.0 * std::numbers::ln2).epsilon(1e-12));
}
