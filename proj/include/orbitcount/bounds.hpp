#pragma once

// Log-domain evaluators for the upper bounds on fixed-point counts, passive
// pair totals and the average-stabilizer excess delta, plus the auxiliary
// quantities (entropy, contraction factors, ball-size and chain estimates)
// they are built from. Everything returns natural logs as doubles; exact
// integer inputs arrive as BigInt and are logged via ln_bigint.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "orbitcount/numeric.hpp"
#include "orbitcount/orbits.hpp"

namespace orbitcount {

// Binary entropy in nats; h(0) = h(1) = 0.
inline double entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("entropy: p outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

inline double entropy(const BigRat& p) { return entropy(to_double(p)); }

// Contraction factor for the subset action: sqrt(1 - 2*lambda*(1-lambda)).
inline double xi1(double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw std::domain_error("xi1: lambda outside [0, 1]");
    return std::sqrt(1.0 - 2.0 * lambda * (1.0 - lambda));
}

// Contraction factor for the multiset action: sqrt((1 - eta) / (1 + eta)).
inline double xi2(double eta) {
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("xi2: eta outside [0, 1]");
    return std::sqrt((1.0 - eta) / (1.0 + eta));
}

// Shared (n, m, kind) context. The theorems need 0 < m < n for subsets and
// m >= 1 for multisets; anything else is rejected as out of range.
struct BoundParams {
    int n;
    int m;
    ActionKind kind;

    BoundParams(int n_, int m_, ActionKind kind_) : n(n_), m(m_), kind(kind_) {
        if (n < 1) throw std::domain_error("BoundParams: domain must be nonempty");
        if (kind == ActionKind::Subsets && (m <= 0 || m >= n))
            throw std::domain_error("out of theorem range: subsets need 0 < m < n");
        if (kind == ActionKind::Multisets && m <= 0)
            throw std::domain_error("out of theorem range: multisets need m > 0");
    }

    double lambda() const { return static_cast<double>(m) / n; }
    double eta() const { return static_cast<double>(m) / (n + static_cast<double>(m)); }

    double xi() const {
        return kind == ActionKind::Subsets ? xi1(lambda()) : xi2(eta());
    }
    double ln_xi() const { return std::log(xi()); }

    // n*h(lambda) for subsets, (n+m)*h(eta) for multisets.
    double entropy_exponent() const {
        return kind == ActionKind::Subsets
                   ? n * entropy(lambda())
                   : (n + static_cast<double>(m)) * entropy(eta());
    }

    // (1/2)*ln(m(n-m)/n) for subsets, (1/2)*ln(m(n+m)/n) for multisets.
    double sqrt_factor_ln() const {
        const double prod = kind == ActionKind::Subsets
                                ? static_cast<double>(m) * (n - static_cast<double>(m)) / n
                                : static_cast<double>(m) * (n + static_cast<double>(m)) / n;
        return 0.5 * std::log(prod);
    }
};

// Entropy-form lower bound on ln of the carrier size, strictly below the
// exact value:
//   subsets:   n*h(lambda) - (1/2)*ln(2*pi*m(n-m)/n) - 1/6
//   multisets: (n+m)*h(eta) - (1/2)*ln(2*pi*(n+m)) + (1/2)*ln((1-eta)/eta) - 1/6
inline double carrier_lower_bound(const BoundParams& params) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    if (params.kind == ActionKind::Subsets) {
        const double variance = static_cast<double>(params.m) *
                                (params.n - static_cast<double>(params.m)) / params.n;
        return params.entropy_exponent() - 0.5 * std::log(kTwoPi * variance) - 1.0 / 6.0;
    }
    const double eta = params.eta();
    return params.entropy_exponent() -
           0.5 * std::log(kTwoPi * (params.n + static_cast<double>(params.m))) +
           0.5 * std::log((1.0 - eta) / eta) - 1.0 / 6.0;
}

// Per-element bound: a permutation moving beta points fixes at most
// xi^beta * e^(entropy exponent) carrier elements.
inline double element_fix_bound(int beta, const BoundParams& params) {
    if (beta < 0 || beta > params.n)
        throw std::invalid_argument("element_fix_bound: beta outside [0, n]");
    return params.entropy_exponent() + beta * params.ln_xi();
}

// Aggregate over a support profile F: ln(sum_k F[k]*xi^k) + entropy exponent.
inline double profile_fix_sum_bound(const FixedDegreePolynomial& profile, const BoundParams& params) {
    if (profile.degree != params.n)
        throw std::invalid_argument("profile_fix_sum_bound: profile degree mismatch");
    const double ln_xi = params.ln_xi();
    std::vector<double> terms;
    for (int k = 0; k <= profile.degree; ++k) {
        const BigInt& f = profile.counts[static_cast<std::size_t>(k)];
        if (f > 0) terms.push_back(ln_bigint(f) + k * ln_xi);
    }
    return params.entropy_exponent() + log_sum_exp(terms);
}

// Coarser aggregate using only |K| and the minimal support mu over K.
inline double uniform_fix_sum_bound(const BigInt& size_K, int mu, const BoundParams& params) {
    if (size_K <= 0) throw std::invalid_argument("uniform_fix_sum_bound: empty collection");
    if (mu < 0) throw std::invalid_argument("uniform_fix_sum_bound: negative mu");
    return params.entropy_exponent() + ln_bigint(size_K) + mu * params.ln_xi();
}

// Two-term refinement: B is the low-support part of K, mu_star the minimal
// support outside B.
inline double split_fix_sum_bound(const BigInt& size_K, const BigInt& size_B, int mu, int mu_star,
                          const BoundParams& params) {
    if (size_K <= 0 || size_B < 0 || size_B >= size_K)
        throw std::invalid_argument("split_fix_sum_bound: need 0 <= |B| < |K|");
    if (mu < 0 || mu_star < mu)
        throw std::invalid_argument("split_fix_sum_bound: need mu_star >= mu >= 0");
    const double ln_xi = params.ln_xi();
    std::vector<double> terms;
    terms.push_back(ln_bigint(size_K - size_B) + mu_star * ln_xi);
    if (size_B > 0) terms.push_back(ln_bigint(size_B) + mu * ln_xi);
    return params.entropy_exponent() + log_sum_exp(terms);
}

// ln bound on delta for the whole group: ln 3 + (1/2)ln(m(n-+m)/n)
// + mu*ln(xi) + ln|G|, with mu the minimal degree of G.
inline double delta_group_bound(const BigInt& order_G, int mu, const BoundParams& params) {
    if (order_G < 2) throw std::invalid_argument("delta_group_bound: trivial group");
    if (mu < 1) throw std::invalid_argument("delta_group_bound: minimal degree must be positive");
    return std::log(3.0) + params.sqrt_factor_ln() + mu * params.ln_xi() + ln_bigint(order_G);
}

// One link of a filtration B_1 c B_2 c ... c B_p = G. For i < p, mu holds the
// minimal support outside B_i; the final link is the whole group and its mu
// field is ignored.
struct ChainLink {
    BigInt size;
    int mu = 0;
};

// Filtration refinement of delta_group_bound:
//   ln 3 + (1/2)ln(m(n-+m)/n)
//     + ln( sum_{i<p} (|B_{i+1}|-|B_i|)*xi^{mu_i} + |B_1|*xi^{mu} ).
// Larger sets have larger complement-minimal-degrees, so the mu values must
// be nondecreasing along the chain.
inline double delta_chain_bound(const BigInt& order_G, const std::vector<ChainLink>& chain,
                          int mu, const BoundParams& params) {
    if (chain.empty()) throw std::invalid_argument("delta_chain_bound: empty chain");
    if (chain.back().size != order_G)
        throw std::invalid_argument("delta_chain_bound: chain must end at the full group");
    if (mu < 1) throw std::invalid_argument("delta_chain_bound: minimal degree must be positive");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].size <= 0)
            throw std::invalid_argument("delta_chain_bound: chain sizes must be positive");
        if (i + 1 < chain.size() && chain[i].size > chain[i + 1].size)
            throw std::invalid_argument("delta_chain_bound: chain sizes must be nondecreasing");
        if (i + 2 < chain.size() &&
            (chain[i].mu < mu || chain[i].mu > chain[i + 1].mu))
            throw std::invalid_argument("delta_chain_bound: chain mu values must be nondecreasing");
        if (i + 2 == chain.size() && chain[i].mu < mu)
            throw std::invalid_argument("delta_chain_bound: chain mu below group minimal degree");
    }
    const double ln_xi = params.ln_xi();
    std::vector<double> terms;
    terms.push_back(ln_bigint(chain.front().size) + mu * ln_xi);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const BigInt diff = chain[i + 1].size - chain[i].size;
        if (diff > 0) terms.push_back(ln_bigint(diff) + chain[i].mu * ln_xi);
    }
    return std::log(3.0) + params.sqrt_factor_ln() + log_sum_exp(terms);
}

// Sphere-by-sphere form: ln 3 + (1/2)ln(m(n-+m)/n) + ln(sum_{r>=1} f[r]*xi^r),
// where f is the support profile of the group. A trivial group sums to zero
// and the bound degenerates to -infinity.
inline double delta_sphere_bound(const FixedDegreePolynomial& profile, const BoundParams& params) {
    const double ln_xi = params.ln_xi();
    std::vector<double> terms;
    for (int r = 1; r <= profile.degree; ++r) {
        const BigInt& f = profile.counts[static_cast<std::size_t>(r)];
        if (f > 0) terms.push_back(ln_bigint(f) + r * ln_xi);
    }
    return std::log(3.0) + params.sqrt_factor_ln() + log_sum_exp(terms);
}

enum class RegionCheck { NotInRegion, Holds, Fails };

// Checks whether sqrt(m(n-+m)/n) * xi^(sqrt(n)/2) < eps, the criterion behind
// the vanishing of delta for groups with minimal degree >= sqrt(n)/2. The
// subset form asks min(m, n-m) > c*sqrt(n)*ln(n); the multiset form asks
// m > c*sqrt(n)*ln(n) with n > 16.
inline RegionCheck vanishing_region_check(double c, int n, int m, double eps, ActionKind kind) {
    if (c <= 0.5) throw std::invalid_argument("vanishing_region_check: need c > 1/2");
    if (eps <= 0.0) throw std::invalid_argument("vanishing_region_check: need eps > 0");
    if (n < 1 || m < 0) throw std::invalid_argument("vanishing_region_check: bad n or m");
    const double threshold = c * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
    if (kind == ActionKind::Subsets) {
        if (std::min(m, n - m) <= threshold) return RegionCheck::NotInRegion;
    } else {
        if (m <= threshold || n <= 16) return RegionCheck::NotInRegion;
    }
    const BoundParams params(n, m, kind);
    const double lhs_ln =
        params.sqrt_factor_ln() + 0.5 * std::sqrt(static_cast<double>(n)) * params.ln_xi();
    return lhs_ln < std::log(eps) ? RegionCheck::Holds : RegionCheck::Fails;
}

// Affine-group specialization with n = q^d, minimal degree q^d - q^(d-1):
// ln 3 + (1/2)ln(m(n-+m)/n) + (q^d - q^(d-1))*ln(xi) + ln_order_term.
inline double affine_delta_bound_with_order(int d, int q, int m, ActionKind kind, double ln_order) {
    if (d < 1 || q < 2) throw std::invalid_argument("affine_delta_bound: need d >= 1, q >= 2");
    double n_real = std::pow(static_cast<double>(q), d);
    if (n_real > 1e9) throw std::invalid_argument("affine_delta_bound: domain too large");
    const int n = static_cast<int>(std::llround(n_real));
    const BoundParams params(n, m, kind);
    const int mu = n - n / q; // q^d - q^(d-1), exact since q | n
    return std::log(3.0) + params.sqrt_factor_ln() + mu * params.ln_xi() + ln_order;
}

// Printed form of the specialization, with d^2 * ln q as the order term.
inline double affine_delta_bound(int d, int q, int m, ActionKind kind) {
    return affine_delta_bound_with_order(d, q, m, kind,
                                  static_cast<double>(d) * d * std::log(static_cast<double>(q)));
}

// ln of the coarse ball-size estimate min(C(n,r)*r!, n^r) for the number of
// permutations of n points moving at most r of them.
inline double ball_size_bound(int n, int r) {
    if (n < 1 || r < 0 || r > n) throw std::invalid_argument("ball_size_bound: bad n or r");
    const double via_factorial = ln_bigint(binomial(n, r) * factorial(r));
    const double via_power = r * std::log(static_cast<double>(n));
    return std::min(via_factorial, via_power);
}

// Lower bound r(2n-r-2)/2 on the minimal support of the pair action outside
// the radius-r ball: a sigma moving beta > r base points moves at least
// beta(2n-beta-2)/2 of the C(n,2) pairs, and that quadratic is increasing up
// to beta = n-1. A fixed-point-free product of 2-cycles (even n, beta = n)
// sits past the vertex, so the bound is strict only for r <= n-3 (for odd n,
// for all r < n): at r = n-2 it is attained exactly, at r = n-1 it overshoots
// the true minimum by 1/2. Chain construction only consumes radii well below
// n, where the bound is strict.
inline BigRat pair_action_mu_bound(long long n, long long r) {
    if (n < 2 || r < 0 || r > n)
        throw std::invalid_argument("pair_action_mu_bound: bad n or r");
    return BigRat(BigInt(r) * (2 * BigInt(n) - r - 2), 2);
}

// Radii r_1 = 2 < r_2 < ... for the filtration of the pair action by balls,
// each r_i the largest integer with r_i + 1/2 < kappa * r_{i-1} * (2 - r_{i-1}/n).
// Terminates before n. When the recursion fails to grow (r_2 < 3 for small n)
// the stalled flag is set and the truncated sequence returned as data.
struct ChainConstruction {
    std::vector<long long> radii;
    bool stalled = false;
};

inline ChainConstruction pair_chain_radii(const BigRat& kappa, long long n) {
    if (kappa <= 1) throw std::invalid_argument("pair_chain_radii: need kappa > 1");
    if (n < 3) throw std::invalid_argument("pair_chain_radii: need n >= 3");
    ChainConstruction result;
    result.radii.push_back(2);
    for (;;) {
        const long long r = result.radii.back();
        // x = kappa * r * (2n - r) / n - 1/2, exactly.
        const BigRat x = kappa * BigRat(BigInt(r) * (2 * BigInt(n) - r), BigInt(n)) - BigRat(1, 2);
        const BigInt num = boost::multiprecision::numerator(x);
        const BigInt den = boost::multiprecision::denominator(x);
        BigInt floor_x = num / den;
        if (num < 0 && floor_x * den != num) --floor_x;
        const BigInt largest_below = (floor_x * den == num) ? floor_x - 1 : floor_x;
        if (largest_below >= n) break;
        const long long next = largest_below.convert_to<long long>();
        if (next <= r) {
            result.stalled = true;
            break;
        }
        result.radii.push_back(next);
    }
    return result;
}

enum class GroupClass { Uniprimitive, TwoTransitive };

// Classical estimates: minimal-degree lower bound and ln|G| upper bound for
// uniprimitive groups (sqrt(n)/2 and 4*sqrt(n)*(ln n)^2) and for 2-transitive
// groups other than the full symmetric/alternating ones (n/3 - (2/3)*sqrt(n)
// and 72*(ln n)^3).
struct ClassBounds {
    double mu_lb;
    double ln_order_ub;
};

inline ClassBounds primitive_class_estimates(long long n, GroupClass cls) {
    if (n < 2) throw std::invalid_argument("primitive_class_estimates: need n >= 2");
    const double root = std::sqrt(static_cast<double>(n));
    const double ln_n = std::log(static_cast<double>(n));
    if (cls == GroupClass::Uniprimitive)
        return {root / 2.0, 4.0 * root * ln_n * ln_n};
    return {static_cast<double>(n) / 3.0 - (2.0 / 3.0) * root, 72.0 * ln_n * ln_n * ln_n};
}

// Asymptotic orbit quantities for 2-transitive groups, with a free slack
// parameter delta in (0, 1/8):
//   regular orbit size:  ln|O| >= ln|G| * A / (ln ln|G|)^2, A = (1/8-delta)|ln xi|,
//                        evaluated with the uniprimitive ln|G| estimate;
//   stabilizer excess:   ln(avg stab - 1) <= (n/3 - (2/3+delta)sqrt(n)) * ln xi.
struct TwoTransitiveAsymptotics {
    double regular_orbit_size_lb_ln;
    double stab_minus_one_ub_ln;
};

inline TwoTransitiveAsymptotics two_transitive_asymptotics(int n, int m, ActionKind kind, double delta) {
    if (delta <= 0.0 || delta >= 0.125)
        throw std::invalid_argument("two_transitive_asymptotics: need delta in (0, 1/8)");
    const BoundParams params(n, m, kind);
    const double abs_ln_xi = std::fabs(params.ln_xi());
    const double a_const = (0.125 - delta) * abs_ln_xi;
    const double ln_order = primitive_class_estimates(n, GroupClass::Uniprimitive).ln_order_ub;
    const double ln_ln_order = std::log(ln_order);
    const double root = std::sqrt(static_cast<double>(n));
    TwoTransitiveAsymptotics out;
    out.regular_orbit_size_lb_ln = ln_order * a_const / (ln_ln_order * ln_ln_order);
    out.stab_minus_one_ub_ln =
        (static_cast<double>(n) / 3.0 - (2.0 / 3.0 + delta) * root) * params.ln_xi();
    return out;
}

// Named bound values attached to one exact quantity, for reporting.
struct BoundEntry {
    std::string name;
    double ln_value = 0.0;
    std::optional<double> slack; // ln_value - exact_ln when both are finite
};

struct BoundReport {
    std::optional<double> exact_ln;
    std::vector<BoundEntry> entries;
};

} // namespace orbitcount
