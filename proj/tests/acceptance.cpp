// Acceptance gate for the orbit-counting engine. Eight checks: enumeration
// agreement, structural minimal degrees, unlabeled graph counts, the bound
// dominance ladder, regular-orbit fraction guarantees, the affine
// specialization, the pair-action machinery, and the asymptotic formula
// plumbing. Prints one [PASS]/[FAIL] line per criterion; exits nonzero if any
// criterion fails. All tolerances are pinned here.

#include "orbitcount/bounds.hpp"
#include "orbitcount/catalog.hpp"
#include "orbitcount/orbits.hpp"
#include "orbitcount/report.hpp"
#include "orbitcount/series.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

using namespace orbitcount;

namespace {

constexpr double kSlackTolerance = 1e-9;   // one-sided dominance tolerance, ln domain
constexpr double kFormulaRelTolerance = 1e-12;
constexpr std::size_t kOracleCarrierCap = 2'000'000;
constexpr double kCensusBudgetSeconds = 60.0;

struct Criterion {
    int ok_checks = 0;
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what) {
        if (condition)
            ++ok_checks;
        else if (failures.size() < 8)
            failures.push_back(what);
        else
            failures.back() = "...more failures suppressed";
    }
    bool ok() const { return failures.empty(); }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
};

// The census corpus: symmetric and alternating groups to degree 6, cyclic and
// dihedral to degree 10, the pair actions of S_3..S_6, the triple action of
// S_5, and three linear/affine groups.
std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;
    for (int n = 1; n <= 6; ++n)
        corpus.push_back({"S_" + std::to_string(n), make_symmetric(n)});
    for (int n = 1; n <= 6; ++n)
        corpus.push_back({"A_" + std::to_string(n), make_alternating(n)});
    for (int n = 1; n <= 10; ++n)
        corpus.push_back({"C_" + std::to_string(n), make_cyclic(n)});
    for (int n = 3; n <= 10; ++n)
        corpus.push_back({"D_" + std::to_string(n), make_dihedral(n)});
    for (int n = 3; n <= 6; ++n)
        corpus.push_back({"S_" + std::to_string(n) + "^2",
                          induced_on_ksubsets(make_symmetric(n), 2)});
    corpus.push_back({"S_5^3", induced_on_ksubsets(make_symmetric(5), 3)});
    corpus.push_back({"GL(2,2)", make_GL(2, 2)});
    corpus.push_back({"AGL(2,2)", make_AGL(2, 2)});
    corpus.push_back({"AGL(2,3)", make_AGL(2, 3)});
    return corpus;
}

struct CensusRecord {
    std::string name;
    int m;
    ActionKind kind;
    BigInt carrier;
    BigInt orbits;
    BigInt regular;
    BigRat delta;
    BigInt order;
    bool match;
};

std::string census_tag(const CensusRecord& r) {
    return r.name + " " + to_string(r.kind) + " m=" + std::to_string(r.m);
}

// Criterion 1 workhorse: Burnside versus brute force over every feasible
// (group, kind, m) cell, collecting exact regular-orbit counts on the way.
std::vector<CensusRecord> run_census(const std::vector<CorpusEntry>& corpus) {
    std::vector<CensusRecord> records;
    OracleOptions options;
    options.carrier_cap = kOracleCarrierCap;
    for (const auto& entry : corpus) {
        const int degree = entry.group.degree();
        for (ActionKind kind : {ActionKind::Subsets, ActionKind::Multisets}) {
            const int m_hi = kind == ActionKind::Subsets ? degree : degree + 2;
            for (int m = 0; m <= m_hi; ++m) {
                const BigInt carrier = carrier_size(degree, m, kind);
                if (carrier == 0 || carrier > BigInt(kOracleCarrierCap)) continue;
                const OrbitSummary exact = orbit_count(entry.group, m, kind);
                const OrbitSummary counted = brute_force_orbits(entry.group, m, kind, options);
                CensusRecord r;
                r.name = entry.name;
                r.m = m;
                r.kind = kind;
                r.carrier = carrier;
                r.orbits = exact.orbit_count;
                r.regular = counted.regular_orbit_count.value_or(BigInt(0));
                r.delta = exact.delta;
                r.order = entry.group.order();
                r.match = exact.orbit_count == counted.orbit_count &&
                          exact.avg_stabilizer == counted.avg_stabilizer;
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

Criterion criterion1(const std::vector<CensusRecord>& records, double census_seconds) {
    Criterion c;
    for (const auto& r : records) c.expect(r.match, census_tag(r) + ": enumeration mismatch");
    c.expect(census_seconds < kCensusBudgetSeconds,
             "census took " + std::to_string(census_seconds) + "s, budget 60s");
    return c;
}

Criterion criterion2() {
    Criterion c;
    for (int n = 4; n <= 7; ++n) {
        const FiniteGroup pairs = induced_on_ksubsets(make_symmetric(n), 2);
        const int expected = 2 * n - 4;
        c.expect(minimal_degree_group(pairs) == expected,
                 "pair action of S_" + std::to_string(n) + ": minimal degree != " +
                     std::to_string(expected));
        c.expect(minimal_degree_from_histogram(symmetric_induced_histogram(n, 2)) == expected,
                 "pair-action histogram of S_" + std::to_string(n) + ": minimal degree");
    }
    const std::vector<std::tuple<int, int, int>> affine = {{2, 2, 2}, {2, 3, 6}, {3, 2, 4}};
    for (const auto& [d, q, expected] : affine)
        c.expect(minimal_degree_group(make_AGL(d, q)) == expected,
                 "AGL(" + std::to_string(d) + "," + std::to_string(q) + "): minimal degree != " +
                     std::to_string(expected));
    for (int n = 2; n <= 8; ++n)
        c.expect(minimal_degree_from_histogram(symmetric_histogram(n)) == 2,
                 "S_" + std::to_string(n) + " natural: minimal degree != 2");
    return c;
}

Criterion criterion3() {
    Criterion c;
    const std::map<int, BigInt> totals = {{4, 11}, {5, 34}, {6, 156}};
    for (const auto& [n, expected_total] : totals) {
        const FiniteGroup g = induced_on_ksubsets(make_symmetric(n), 2);
        const int pairs = g.degree();
        std::vector<BigInt> nu;
        BigInt total = 0;
        for (int m = 0; m <= pairs; ++m) {
            const OrbitSummary exact = orbit_count(g, m, ActionKind::Subsets);
            const OrbitSummary counted = brute_force_orbits(g, m, ActionKind::Subsets);
            c.expect(exact.orbit_count == counted.orbit_count,
                     "graphs on " + std::to_string(n) + " vertices, m=" + std::to_string(m));
            nu.push_back(exact.orbit_count);
            total += exact.orbit_count;
        }
        c.expect(total == expected_total, "graph total on " + std::to_string(n) + " vertices");
        for (int m = 0; m <= pairs; ++m)
            c.expect(nu[static_cast<std::size_t>(m)] == nu[static_cast<std::size_t>(pairs - m)],
                     "graph counts not palindromic at n=" + std::to_string(n));
        for (int m = 1; 2 * m <= pairs; ++m)
            c.expect(nu[static_cast<std::size_t>(m - 1)] <= nu[static_cast<std::size_t>(m)],
                     "graph counts not unimodal at n=" + std::to_string(n));
    }
    return c;
}

Criterion criterion4(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    for (const auto& entry : corpus) {
        const int degree = entry.group.degree();
        const BigInt& order = entry.group.order();
        const TypeHistogram& histogram = entry.group.type_histogram();
        const FixedDegreePolynomial profile = profile_from_histogram(histogram, degree);
        const int min_deg = order > 1 ? minimal_degree_from_histogram(histogram) : 0;

        // Identity-free support levels for the two-term refinement.
        int mu_low = 0, mu_next = 0;
        BigInt low_count = 0;
        for (int r = 1; r <= degree; ++r) {
            const BigInt& f = profile.counts[static_cast<std::size_t>(r)];
            if (f == 0) continue;
            if (mu_low == 0) {
                mu_low = r;
                low_count = f;
            } else {
                mu_next = r;
                break;
            }
        }

        // Full-sphere filtration radii: one link per support level below the top.
        std::vector<long long> all_radii;
        for (long long r = 0; r < degree; ++r) all_radii.push_back(r);

        for (ActionKind kind : {ActionKind::Subsets, ActionKind::Multisets}) {
            const int m_lo = 1;
            const int m_hi = kind == ActionKind::Subsets ? degree - 1 : degree + 2;
            for (int m = m_lo; m <= m_hi; ++m) {
                const BoundParams params(degree, m, kind);
                const std::string tag = entry.name + " " + to_string(kind) +
                                        " m=" + std::to_string(m);

                // Entropy lower bound on the carrier, strictly below.
                const BigInt carrier = carrier_size(degree, m, kind);
                c.expect(carrier_lower_bound(params) < ln_bigint(carrier),
                         tag + ": carrier lower bound not strict");

                // Per-element bound and the integer invariant-count bound.
                for (const auto& [ct, count] : histogram) {
                    const BigInt fix = fixed_point_count(ct, m, kind);
                    if (fix > 0) {
                        const double bound = element_fix_bound(support_size(ct), params);
                        c.expect(ln_bigint(fix) <= bound + kSlackTolerance,
                                 tag + ": per-element bound violated");
                    }
                    if (kind == ActionKind::Subsets)
                        c.expect(2 * ct.cycle_count() <= 2 * ct.n - support_size(ct),
                                 tag + ": invariant-subset total bound violated");
                }

                // Fix-sum ladder over the whole group.
                const BigInt fix_total = passive_pair_count(histogram, m, kind);
                const double by_profile = profile_fix_sum_bound(profile, params);
                const double by_uniform = uniform_fix_sum_bound(order, 0, params);
                c.expect(ln_bigint(fix_total) <= by_profile + kSlackTolerance,
                         tag + ": profile fix-sum bound violated");
                c.expect(by_profile <= by_uniform + kSlackTolerance,
                         tag + ": profile bound above uniform bound");

                // Two-term refinement over the identity-free part.
                if (mu_next > mu_low) {
                    const BigInt fix_rest = fix_total - carrier;
                    const double split =
                        split_fix_sum_bound(order - 1, low_count, mu_low, mu_next, params);
                    if (fix_rest > 0)
                        c.expect(ln_bigint(fix_rest) <= split + kSlackTolerance,
                                 tag + ": two-term fix-sum bound violated");
                    c.expect(split <= uniform_fix_sum_bound(order - 1, mu_low, params) +
                                          kSlackTolerance,
                             tag + ": two-term bound above its coarse form");
                }

                // Delta ladder for nontrivial groups.
                if (min_deg > 0) {
                    const OrbitSummary summary =
                        orbit_count(histogram, order, degree, m, kind);
                    const double ln_delta = summary.delta == 0
                                                ? -std::numeric_limits<double>::infinity()
                                                : ln_bigrat(summary.delta);
                    const double spheres = delta_sphere_bound(profile, params);
                    const auto full_chain =
                        detail::chain_from_profile(profile, order, all_radii);
                    const double chain_bound =
                        delta_chain_bound(order, full_chain, min_deg, params);
                    const auto ball_chain =
                        detail::chain_from_profile(profile, order, {min_deg});
                    const double ball_bound =
                        delta_chain_bound(order, ball_chain, min_deg, params);
                    const double group_bound = delta_group_bound(order, min_deg, params);
                    c.expect(ln_delta <= spheres + kSlackTolerance,
                             tag + ": sphere-sum delta bound violated");
                    c.expect(spheres <= chain_bound + kSlackTolerance,
                             tag + ": sphere sum above the full filtration bound");
                    c.expect(ln_delta <= ball_bound + kSlackTolerance,
                             tag + ": single-ball filtration bound violated");
                    c.expect(ln_delta <= group_bound + kSlackTolerance,
                             tag + ": group-level delta bound violated");
                }
            }
        }
    }
    return c;
}

Criterion criterion5(const std::vector<CensusRecord>& records) {
    Criterion c;
    for (const auto& r : records) {
        if (r.delta >= 1 || r.orbits == 0) continue;
        const RegularFractions bounds = regular_fraction_bounds(r.delta);
        const BigRat orbit_fraction(r.regular, r.orbits);
        const BigRat point_fraction = BigRat(r.regular * r.order, r.carrier);
        c.expect(orbit_fraction >= bounds.orbit_fraction_lb,
                 census_tag(r) + ": regular orbit fraction below (1-delta)/(1+delta)");
        c.expect(point_fraction >= bounds.point_fraction_lb,
                 census_tag(r) + ": rigid point fraction below 1-delta");
    }
    return c;
}

Criterion criterion6() {
    Criterion c;
    for (const auto& [d, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        const FiniteGroup g = make_AGL(d, q);
        const int n = g.degree();
        const std::string name = "AGL(" + std::to_string(d) + "," + std::to_string(q) + ")";
        const double safe_order =
            static_cast<double>(d * d + d) * std::log(static_cast<double>(q));
        const double exact_order = ln_bigint(g.order());
        for (ActionKind kind : {ActionKind::Subsets, ActionKind::Multisets}) {
            const int m_hi = kind == ActionKind::Subsets ? n - 1 : n + 2;
            for (int m = 1; m <= m_hi; ++m) {
                const OrbitSummary summary = orbit_count(g, m, kind);
                const double ln_delta = summary.delta == 0
                                            ? -std::numeric_limits<double>::infinity()
                                            : ln_bigrat(summary.delta);
                const std::string tag =
                    name + " " + to_string(kind) + " m=" + std::to_string(m);
                const double printed = affine_delta_bound(d, q, m, kind);
                const double safe = affine_delta_bound_with_order(d, q, m, kind, safe_order);
                const double exact = affine_delta_bound_with_order(d, q, m, kind, exact_order);
                c.expect(ln_delta <= printed + kSlackTolerance,
                         tag + ": printed-form affine bound violated");
                c.expect(ln_delta <= safe + kSlackTolerance,
                         tag + ": safe-order affine bound violated");
                c.expect(ln_delta <= exact + kSlackTolerance,
                         tag + ": exact-order affine bound violated");
                c.expect(exact < safe, tag + ": exact-order bound not tighter than safe form");
            }
        }
    }
    return c;
}

Criterion criterion7() {
    Criterion c;

    // Fixed points of the pair action, all of S_n for n <= 8.
    for (int n = 4; n <= 8; ++n) {
        const auto table = detail::enumerate_ksubsets(n, 2);
        bool all_equal = true;
        for (const auto& sigma : oracle::all_permutations(n)) {
            const CycleType ct = cycle_type(sigma);
            const BigInt expected =
                binomial(ct.fixed_points(), 2) + BigInt(ct.multiplicity(2));
            const Permutation lifted = induced_subset_permutation(sigma, 2, table);
            if (BigInt(cycle_type(lifted).fixed_points()) != expected ||
                alpha_m(ct, 2) != expected) {
                all_equal = false;
                break;
            }
        }
        c.expect(all_equal, "pair-action fixed-point identity failed in S_" + std::to_string(n));
    }

    // Ball sizes against the factorial/power estimate, exact integers.
    for (int n = 2; n <= 8; ++n) {
        const auto reps = symmetric_class_reps(n);
        for (int r = 0; r <= n; ++r) {
            BigInt ball = 0;
            for (const auto& [ct, size] : reps)
                if (support_size(ct) <= r) ball += size;
            const BigInt estimate =
                std::min(binomial(n, r) * factorial(r), int_pow(BigInt(n), static_cast<unsigned long long>(r)));
            c.expect(ball <= estimate, "ball estimate violated at n=" + std::to_string(n) +
                                           " r=" + std::to_string(r));
            c.expect(ln_bigint(ball) <= ball_size_bound(n, r) + kSlackTolerance,
                     "log ball estimate violated at n=" + std::to_string(n));
        }
    }

    // Pair-action minimal support outside each ball beats the quadratic bound.
    for (int n = 4; n <= 8; ++n) {
        const BigInt pair_count = binomial(n, 2);
        for (int r = 1; r < n; ++r) {
            BigInt exact_mu = pair_count + 1;
            for (const auto& [ct, size] : symmetric_class_reps(n)) {
                if (support_size(ct) <= r) continue;
                const BigInt moved = pair_count - alpha_m(ct, 2);
                if (moved < exact_mu) exact_mu = moved;
            }
            c.expect(exact_mu <= pair_count, "no element outside ball at n=" + std::to_string(n));
            c.expect(BigRat(exact_mu) > pair_action_mu_bound(n, r),
                     "pair-action support bound not strict at n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
        }
    }

    // Radius recursion: strictly increasing, each term maximal.
    const ChainConstruction chain = pair_chain_radii(BigRat(2), 100);
    c.expect(!chain.stalled, "radius recursion stalled at n=100");
    c.expect(chain.radii.size() >= 3, "radius recursion too short at n=100");
    for (std::size_t i = 0; i + 1 < chain.radii.size(); ++i) {
        const BigRat r(chain.radii[i]);
        const BigRat s(chain.radii[i + 1]);
        const BigRat rhs = BigRat(2) * r * (BigRat(200) - r) / BigRat(100);
        c.expect(s > r, "radius sequence not increasing");
        c.expect(s + BigRat(1, 2) < rhs, "radius violates its defining inequality");
        c.expect(s + BigRat(3, 2) >= rhs, "radius not maximal");
    }
    return c;
}

Criterion criterion8() {
    Criterion c;
    auto close = [](double a, double b) {
        if (a == b) return true;
        return std::fabs(a - b) <= kFormulaRelTolerance * std::max(std::fabs(a), std::fabs(b));
    };
    for (long long n : {100LL, 1000LL, 10000LL}) {
        const double root = std::sqrt(static_cast<double>(n));
        const double ln_n = std::log(static_cast<double>(n));
        const ClassBounds uni = primitive_class_estimates(n, GroupClass::Uniprimitive);
        c.expect(close(uni.mu_lb, root / 2.0), "uniprimitive minimal-degree estimate");
        c.expect(close(uni.ln_order_ub, 4.0 * root * ln_n * ln_n), "uniprimitive order estimate");
        const ClassBounds doubly = primitive_class_estimates(n, GroupClass::TwoTransitive);
        c.expect(close(doubly.mu_lb, static_cast<double>(n) / 3.0 - (2.0 / 3.0) * root),
                 "two-transitive minimal-degree estimate");
        c.expect(close(doubly.ln_order_ub, 72.0 * ln_n * ln_n * ln_n),
                 "two-transitive order estimate");

        for (double delta : {0.01, 0.06, 0.12}) {
            const int m = static_cast<int>(n / 2);
            const TwoTransitiveAsymptotics q =
                two_transitive_asymptotics(static_cast<int>(n), m, ActionKind::Subsets, delta);
            const BoundParams params(static_cast<int>(n), m, ActionKind::Subsets);
            const double a_const = (0.125 - delta) * std::fabs(params.ln_xi());
            const double lll = std::log(uni.ln_order_ub);
            c.expect(close(q.regular_orbit_size_lb_ln, uni.ln_order_ub * a_const / (lll * lll)),
                     "regular-orbit size substitution at n=" + std::to_string(n));
            c.expect(close(q.stab_minus_one_ub_ln,
                           (doubly.mu_lb - delta * root) * params.ln_xi()),
                     "stabilizer-excess substitution at n=" + std::to_string(n));
            c.expect(q.regular_orbit_size_lb_ln > 0, "regular-orbit size bound not positive");
            c.expect(q.stab_minus_one_ub_ln < 0, "stabilizer-excess bound not negative");

            const TwoTransitiveAsymptotics qm = two_transitive_asymptotics(
                static_cast<int>(n), static_cast<int>(n), ActionKind::Multisets, delta);
            const BoundParams mparams(static_cast<int>(n), static_cast<int>(n),
                                      ActionKind::Multisets);
            c.expect(close(qm.stab_minus_one_ub_ln,
                           (doubly.mu_lb - delta * root) * mparams.ln_xi()),
                     "multiset stabilizer-excess substitution at n=" + std::to_string(n));
        }
    }
    return c;
}

int report(int index, const std::string& label, const Criterion& c, double seconds) {
    std::printf("[%s] criterion %d: %s (%d checks, %.1fs)\n", c.ok() ? "PASS" : "FAIL", index,
                label.c_str(), c.ok_checks + static_cast<int>(c.failures.size()), seconds);
    for (const auto& f : c.failures) std::printf("         %s\n", f.c_str());
    return c.ok() ? 0 : 1;
}

} // namespace

int main() {
    int failed = 0;

    const auto corpus_start = std::chrono::steady_clock::now();
    const std::vector<CorpusEntry> corpus = build_corpus();
    const auto census_start = std::chrono::steady_clock::now();
    const std::vector<CensusRecord> records = run_census(corpus);
    const double census_seconds = seconds_since(census_start);

    auto timed = [&](int index, const std::string& label, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        const Criterion c = fn();
        failed += report(index, label, c, seconds_since(start));
    };

    failed += report(1, "exact counts match brute-force enumeration",
                     criterion1(records, census_seconds), seconds_since(corpus_start));
    timed(2, "minimal degrees of the pair and affine actions", criterion2);
    timed(3, "unlabeled graph counts, palindromic and unimodal", criterion3);
    timed(4, "bound dominance ladder over the corpus", [&] { return criterion4(corpus); });
    timed(5, "regular-orbit fractions meet their guarantees",
          [&] { return criterion5(records); });
    timed(6, "affine bound dominates exact delta", criterion6);
    timed(7, "pair-action machinery: fixed points, balls, radii", criterion7);
    timed(8, "asymptotic estimate formulas substitute correctly", criterion8);

    return failed == 0 ? 0 : 1;
}
