#pragma once

// Orbit statistics for the action of a permutation group on the m-subsets or
// m-multisets of its domain. Exact counts come from the Burnside sum over a
// cycle-type histogram; an independent brute-force path enumerates the carrier
// and merges orbits with union-find, so the two can certify each other.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "orbitcount/errors.hpp"
#include "orbitcount/group.hpp"
#include "orbitcount/numeric.hpp"
#include "orbitcount/perm.hpp"
#include "orbitcount/series.hpp"

namespace orbitcount {

enum class ActionKind { Subsets, Multisets };

inline const char* to_string(ActionKind kind) {
    return kind == ActionKind::Subsets ? "subsets" : "multisets";
}

// C(n, m) for subsets, C(n+m-1, m) for multisets.
inline BigInt carrier_size(int n, int m, ActionKind kind) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("carrier_size: negative argument");
    if (m == 0) return 1;
    return kind == ActionKind::Subsets ? binomial(n, m) : binomial(n + m - 1, m);
}

inline BigInt fixed_point_count(const CycleType& ct, int m, ActionKind kind) {
    return kind == ActionKind::Subsets ? alpha_m(ct, m) : alpha_multiset(ct, m);
}

// counts[k] = number of permutations in some collection that move exactly k
// points. No permutation moves exactly one point, hence counts[1] = 0.
struct FixedDegreePolynomial {
    int degree = 0;
    std::vector<BigInt> counts;

    FixedDegreePolynomial() = default;
    FixedDegreePolynomial(int degree_, std::vector<BigInt> counts_)
        : degree(degree_), counts(std::move(counts_)) {
        if (counts.size() != static_cast<std::size_t>(degree) + 1)
            throw std::invalid_argument("FixedDegreePolynomial: counts must have degree+1 entries");
        if (degree >= 1 && counts[1] != 0)
            throw invariant_violation("FixedDegreePolynomial: support size 1 is impossible");
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

struct OrbitSummary {
    BigInt orbit_count;
    BigInt carrier;
    BigRat avg_stabilizer;            // orbit_count * |G| / carrier
    BigRat delta;                     // avg_stabilizer - 1
    std::optional<BigInt> regular_orbit_count; // filled by the brute-force path
};

namespace detail {

inline void check_sandwich(const OrbitSummary& s) {
    if (s.avg_stabilizer < 1 || s.orbit_count > s.carrier)
        throw invariant_violation("orbit summary violates carrier/|G| <= orbits <= carrier");
}

inline OrbitSummary summarize(BigInt orbit_cnt, BigInt carrier, const BigInt& order) {
    if (carrier <= 0)
        throw std::invalid_argument("orbit summary: empty carrier");
    OrbitSummary s;
    s.orbit_count = std::move(orbit_cnt);
    s.carrier = std::move(carrier);
    s.avg_stabilizer = BigRat(s.orbit_count * order, s.carrier);
    s.delta = s.avg_stabilizer - 1;
    check_sandwich(s);
    return s;
}

} // namespace detail

// Sum of fixed-point counts over a cycle-type histogram.
inline BigInt passive_pair_count(const TypeHistogram& histogram, int m, ActionKind kind) {
    BigInt total = 0;
    for (const auto& [ct, count] : histogram)
        total += count * fixed_point_count(ct, m, kind);
    return total;
}

// Same sum over an explicit list of permutations. Bucketing by cycle type
// first keeps the generating-function work proportional to the number of
// distinct types; worker threads split the bucketing.
inline BigInt passive_pair_count(std::span<const Permutation> elements, int m,
                                 ActionKind kind, int threads = 1) {
    std::map<CycleType, BigInt> buckets;
    if (threads <= 1 || elements.size() < 1024) {
        for (const auto& g : elements) ++buckets[cycle_type(g)];
    } else {
        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(threads), elements.size());
        std::vector<std::map<CycleType, BigInt>> partial(nthreads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                const std::size_t lo = elements.size() * t / nthreads;
                const std::size_t hi = elements.size() * (t + 1) / nthreads;
                for (std::size_t i = lo; i < hi; ++i)
                    ++partial[t][cycle_type(elements[i])];
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : partial)
            for (auto& [ct, cnt] : part) buckets[ct] += cnt;
    }
    TypeHistogram histogram(buckets.begin(), buckets.end());
    return passive_pair_count(histogram, m, kind);
}

// Burnside count from a cycle-type histogram plus the group order. The sum of
// fixed points over the whole group is always divisible by the order;
// anything else is a bug upstream.
inline OrbitSummary orbit_count(const TypeHistogram& histogram, const BigInt& order,
                                int n, int m, ActionKind kind) {
    if (order <= 0) throw std::invalid_argument("orbit_count: nonpositive order");
    BigInt fixed_sum = passive_pair_count(histogram, m, kind);
    if (fixed_sum % order != 0)
        throw invariant_violation("orbit_count: Burnside sum not divisible by the group order");
    return detail::summarize(fixed_sum / order, carrier_size(n, m, kind), order);
}

inline OrbitSummary orbit_count(const FiniteGroup& G, int m, ActionKind kind) {
    return orbit_count(G.type_histogram(), G.order(), G.degree(), m, kind);
}

// Smallest number of moved points over a nonempty collection.
inline int minimal_degree_subset(std::span<const Permutation> elements) {
    if (elements.empty())
        throw std::invalid_argument("minimal_degree_subset: empty collection");
    int best = std::numeric_limits<int>::max();
    for (const auto& g : elements) best = std::min(best, support_size(g));
    return best;
}

// Smallest support over the nonidentity part of a histogram.
inline int minimal_degree_from_histogram(const TypeHistogram& histogram) {
    int best = std::numeric_limits<int>::max();
    for (const auto& [ct, count] : histogram) {
        const int s = support_size(ct);
        if (s > 0) best = std::min(best, s);
    }
    if (best == std::numeric_limits<int>::max())
        throw std::invalid_argument("minimal_degree_from_histogram: no nonidentity elements");
    return best;
}

// Minimal degree of the group: identity excluded, so |G| >= 2 is required.
inline int minimal_degree_group(const FiniteGroup& G) {
    if (G.order() < 2)
        throw std::invalid_argument("minimal_degree_group: trivial group");
    return minimal_degree_from_histogram(G.type_histogram());
}

inline FixedDegreePolynomial profile_from_histogram(const TypeHistogram& histogram,
                                                    int degree) {
    std::vector<BigInt> counts(static_cast<std::size_t>(degree) + 1);
    for (const auto& [ct, count] : histogram) {
        if (ct.n != degree)
            throw std::invalid_argument("profile_from_histogram: degree mismatch");
        counts[static_cast<std::size_t>(support_size(ct))] += count;
    }
    return FixedDegreePolynomial(degree, std::move(counts));
}

inline FixedDegreePolynomial fixed_degree_poly(std::span<const Permutation> elements,
                                               int degree) {
    std::vector<BigInt> counts(static_cast<std::size_t>(degree) + 1);
    for (const auto& g : elements) {
        if (g.degree() != degree)
            throw std::invalid_argument("fixed_degree_poly: degree mismatch");
        ++counts[static_cast<std::size_t>(support_size(g))];
    }
    return FixedDegreePolynomial(degree, std::move(counts));
}

inline FixedDegreePolynomial sphere_profile(const FiniteGroup& G) {
    return profile_from_histogram(G.type_histogram(), G.degree());
}

// Lower bounds implied by delta = avg stabilizer - 1: at least (1-d)/(1+d) of
// the orbits are regular and at least 1-d of the points lie in regular orbits.
struct RegularFractions {
    BigRat orbit_fraction_lb;
    BigRat point_fraction_lb;
};

inline RegularFractions regular_fraction_bounds(const BigRat& delta) {
    if (delta < 0)
        throw std::invalid_argument("regular_fraction_bounds: negative delta");
    RegularFractions r;
    r.orbit_fraction_lb = delta >= 1 ? BigRat(0) : BigRat(1 - delta) / BigRat(1 + delta);
    r.point_fraction_lb = delta >= 1 ? BigRat(0) : BigRat(1 - delta);
    return r;
}

// ---------------------------------------------------------------------------
// Brute-force path: enumerate the carrier, merge orbits under the generators.

namespace detail {

inline constexpr std::uint64_t kRankSaturation = std::uint64_t(1) << 62;

// Pascal table saturating at 2^62; ranks of carriers under the cap never
// reach the saturated region.
class BinomTable {
public:
    BinomTable(int n, int k) : cols_(k + 1), cells_((n + 1) * (k + 1), 0) {
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min(i, k); ++j) {
                const std::uint64_t a = at(i - 1, j - 1);
                const std::uint64_t b = at(i - 1, j);
                const std::uint64_t s = a + b;
                at(i, j) = (s < a || s >= kRankSaturation) ? kRankSaturation : s;
            }
        }
    }

    std::uint64_t operator()(int n, int k) const {
        if (k < 0 || k > cols_ - 1 || n < 0) return 0;
        return cells_[static_cast<std::size_t>(n) * cols_ + k];
    }

private:
    std::uint64_t& at(int n, int k) {
        return cells_[static_cast<std::size_t>(n) * cols_ + k];
    }
    int cols_;
    std::vector<std::uint64_t> cells_;
};

// Colex rank of a strictly increasing tuple: sum_i C(a_i, i+1).
inline std::uint64_t colex_rank(const std::vector<Point>& tuple, const BinomTable& binom) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        r += binom(static_cast<int>(tuple[i]), static_cast<int>(i) + 1);
    return r;
}

// Advances a strictly increasing m-tuple over {0..limit-1} in colex order.
// Returns false after the last tuple.
inline bool next_colex(std::vector<Point>& tuple, int limit) {
    const std::size_t m = tuple.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point ceiling =
            (i + 1 < m) ? tuple[i + 1] : static_cast<Point>(limit);
        if (tuple[i] + 1 < ceiling) {
            ++tuple[i];
            for (std::size_t j = 0; j < i; ++j) tuple[j] = static_cast<Point>(j);
            return true;
        }
    }
    return false;
}

// Inverse of colex_rank.
inline std::vector<Point> colex_unrank(std::uint64_t rank, int m, int limit,
                                       const BinomTable& binom) {
    std::vector<Point> tuple(static_cast<std::size_t>(m));
    int hi = limit - 1;
    for (int i = m; i >= 1; --i) {
        int a = hi;
        while (a >= i - 1 && binom(a, i) > rank) --a;
        tuple[static_cast<std::size_t>(i - 1)] = static_cast<Point>(a);
        rank -= binom(a, i);
        hi = a - 1;
    }
    return tuple;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::uint32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::uint32_t component_size(std::uint32_t root) const { return size_[root]; }
    bool is_root(std::uint32_t x) const { return parent_[x] == x; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// The m-multisets over n points embed into the strictly increasing m-tuples
// over n+m-1 points by adding i to the i-th smallest entry; all carrier
// enumeration below works on that subset picture.
struct CarrierCodec {
    int n;
    int m;
    ActionKind kind;
    int tuple_limit; // n for subsets, n+m-1 for multisets

    CarrierCodec(int n_, int m_, ActionKind kind_)
        : n(n_), m(m_), kind(kind_),
          tuple_limit(kind_ == ActionKind::Subsets ? n_ : n_ + m_ - 1) {}

    // Maps the tuple through g and rewrites it in canonical (sorted) form.
    void apply(const std::vector<Point>& tuple, const Permutation& g,
               std::vector<Point>& out) const {
        out.resize(tuple.size());
        if (kind == ActionKind::Subsets) {
            for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = g(tuple[i]);
        } else {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out[i] = g(tuple[i] - static_cast<Point>(i));
        }
        std::sort(out.begin(), out.end());
        if (kind == ActionKind::Multisets)
            for (std::size_t i = 0; i < tuple.size(); ++i) out[i] += static_cast<Point>(i);
    }
};

} // namespace detail

struct OracleOptions {
    std::size_t carrier_cap = 2'000'000;
    int threads = 1;
};

// Enumerates the whole carrier and merges each element with its images under
// the generators; exact, independent of the Burnside path. Requires the
// carrier size to stay under options.carrier_cap.
inline OrbitSummary brute_force_orbits(int degree, std::span<const Permutation> generators,
                                       const BigInt& order, int m, ActionKind kind,
                                       const OracleOptions& options = {}) {
    if (degree < 1) throw std::invalid_argument("brute_force_orbits: degree must be positive");
    if (m < 0) throw std::invalid_argument("brute_force_orbits: negative m");
    if (kind == ActionKind::Subsets && m > degree)
        throw std::invalid_argument("brute_force_orbits: m exceeds the domain");
    const BigInt carrier_big = carrier_size(degree, m, kind);
    if (carrier_big > options.carrier_cap)
        throw cap_exceeded("brute_force_orbits: carrier " + carrier_big.str() +
                           " exceeds cap " + std::to_string(options.carrier_cap));
    const std::size_t carrier = carrier_big.convert_to<std::size_t>();

    const detail::CarrierCodec codec(degree, m, kind);
    const detail::BinomTable binom(std::max(codec.tuple_limit, 1), std::max(m, 1));
    detail::UnionFind uf(carrier);

    if (m > 0 && !generators.empty()) {
        const int threads = std::max(1, options.threads);
        if (threads == 1 || carrier < 4096) {
            std::vector<Point> tuple(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) tuple[static_cast<std::size_t>(i)] = static_cast<Point>(i);
            std::vector<Point> image;
            std::uint64_t rank = 0;
            do {
                for (const auto& g : generators) {
                    codec.apply(tuple, g, image);
                    uf.unite(static_cast<std::uint32_t>(rank),
                             static_cast<std::uint32_t>(detail::colex_rank(image, binom)));
                }
                ++rank;
            } while (detail::next_colex(tuple, codec.tuple_limit));
            if (rank != carrier)
                throw invariant_violation("brute_force_orbits: enumeration miscounted the carrier");
        } else {
            // Image ranks are computed in parallel chunks, then merged in one
            // sequential union pass.
            std::vector<std::uint32_t> images(carrier * generators.size());
            std::vector<std::thread> pool;
            const std::size_t nthreads = std::min<std::size_t>(threads, carrier);
            for (std::size_t t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t] {
                    const std::uint64_t lo = carrier * t / nthreads;
                    const std::uint64_t hi = carrier * (t + 1) / nthreads;
                    std::vector<Point> tuple =
                        detail::colex_unrank(lo, m, codec.tuple_limit, binom);
                    std::vector<Point> image;
                    for (std::uint64_t rank = lo; rank < hi; ++rank) {
                        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
                            codec.apply(tuple, generators[gi], image);
                            images[rank * generators.size() + gi] =
                                static_cast<std::uint32_t>(detail::colex_rank(image, binom));
                        }
                        detail::next_colex(tuple, codec.tuple_limit);
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (std::size_t rank = 0; rank < carrier; ++rank)
                for (std::size_t gi = 0; gi < generators.size(); ++gi)
                    uf.unite(static_cast<std::uint32_t>(rank),
                             images[rank * generators.size() + gi]);
        }
    }

    BigInt orbits = 0;
    BigInt regular = 0;
    for (std::size_t i = 0; i < carrier; ++i) {
        if (!uf.is_root(static_cast<std::uint32_t>(i))) continue;
        ++orbits;
        if (BigInt(uf.component_size(static_cast<std::uint32_t>(i))) == order) ++regular;
    }

    OrbitSummary s = detail::summarize(std::move(orbits), carrier_big, order);
    s.regular_orbit_count = std::move(regular);
    return s;
}

inline OrbitSummary brute_force_orbits(const FiniteGroup& G, int m, ActionKind kind,
                                       const OracleOptions& options = {}) {
    return brute_force_orbits(G.degree(), G.generators(), G.order(), m, kind, options);
}

} // namespace orbitcount
