#pragma once

// Ready-made permutation groups: symmetric, alternating, cyclic, dihedral,
// the induced action of S_n on ell-subsets, and the linear/affine groups
// GL(d,q), AGL(d,q) acting on the vectors of F_q^d. Also parses the textual
// group specs used by the command-line tool ("S:5", "S:4^2", "AGL:2,3",
// "gens:(0 1);(0 1 2 3)").

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitcount/gf.hpp"
#include "orbitcount/group.hpp"
#include "orbitcount/numeric.hpp"
#include "orbitcount/orbits.hpp"
#include "orbitcount/partitions.hpp"
#include "orbitcount/perm.hpp"

namespace orbitcount {

// Display names for the points a catalog group acts on.
struct LabeledDomain {
    std::vector<std::string> labels;
    int size() const { return static_cast<int>(labels.size()); }
};

inline LabeledDomain numeric_domain(int n) {
    LabeledDomain d;
    d.labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d.labels.push_back(std::to_string(i));
    return d;
}

// --- elementary families ---------------------------------------------------

inline FiniteGroup make_symmetric(int n, std::size_t element_cap = kDefaultElementCap) {
    if (n < 1) throw std::invalid_argument("make_symmetric: need n >= 1");
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(parse_permutation("(0 1)", n));
    if (n >= 3) {
        std::vector<Point> cyc(static_cast<std::size_t>(n));
        std::iota(cyc.begin(), cyc.end(), Point{0});
        gens.push_back(permutation_from_cycles(n, {cyc}));
    }
    FiniteGroup g = generate_group(n, std::move(gens), element_cap);
    if (g.order() != factorial(n))
        throw invariant_violation("make_symmetric: wrong order");
    return g;
}

inline FiniteGroup make_alternating(int n, std::size_t element_cap = kDefaultElementCap) {
    if (n < 1) throw std::invalid_argument("make_alternating: need n >= 1");
    std::vector<Permutation> gens;
    if (n >= 3) gens.push_back(parse_permutation("(0 1 2)", n));
    if (n >= 4) {
        // For odd n the full n-cycle is even; for even n use the (n-1)-cycle
        // fixing 0.
        std::vector<Point> cyc;
        for (Point i = (n % 2 == 1) ? 0 : 1; i < static_cast<Point>(n); ++i) cyc.push_back(i);
        gens.push_back(permutation_from_cycles(n, {cyc}));
    }
    FiniteGroup g = generate_group(n, std::move(gens), element_cap);
    if (n >= 3 && g.order() != factorial(n) / 2)
        throw invariant_violation("make_alternating: wrong order");
    return g;
}

inline FiniteGroup make_cyclic(int n, std::size_t element_cap = kDefaultElementCap) {
    if (n < 1) throw std::invalid_argument("make_cyclic: need n >= 1");
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<Point> cyc(static_cast<std::size_t>(n));
        std::iota(cyc.begin(), cyc.end(), Point{0});
        gens.push_back(permutation_from_cycles(n, {cyc}));
    }
    FiniteGroup g = generate_group(n, std::move(gens), element_cap);
    if (g.order() != n) throw invariant_violation("make_cyclic: wrong order");
    return g;
}

// Symmetries of the regular n-gon with vertices 0..n-1: rotation plus the
// reflection i -> n-i mod n.
inline FiniteGroup make_dihedral(int n, std::size_t element_cap = kDefaultElementCap) {
    if (n < 3) throw std::invalid_argument("make_dihedral: need n >= 3");
    std::vector<Point> rot(static_cast<std::size_t>(n));
    std::iota(rot.begin(), rot.end(), Point{0});
    std::vector<Point> refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        refl[static_cast<std::size_t>(i)] = static_cast<Point>((n - i) % n);
    std::vector<Permutation> gens;
    gens.push_back(permutation_from_cycles(n, {rot}));
    gens.push_back(Permutation::from_image(std::move(refl)));
    FiniteGroup g = generate_group(n, std::move(gens), element_cap);
    if (g.order() != 2 * n) throw invariant_violation("make_dihedral: wrong order");
    return g;
}

// --- induced action on ell-subsets -----------------------------------------

namespace detail {

// All ell-subsets of {0..n-1} as sorted tuples, in lexicographic order.
inline std::vector<std::vector<Point>> enumerate_ksubsets(int n, int ell) {
    std::vector<std::vector<Point>> out;
    std::vector<Point> cur(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) cur[static_cast<std::size_t>(i)] = static_cast<Point>(i);
    for (;;) {
        out.push_back(cur);
        int i = ell - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<Point>(n - ell + i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ell; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::size_t lookup_subset(const std::vector<std::vector<Point>>& table,
                                 const std::vector<Point>& key) {
    auto it = std::lower_bound(table.begin(), table.end(), key);
    if (it == table.end() || *it != key)
        throw invariant_violation("induced action: image subset not found");
    return static_cast<std::size_t>(it - table.begin());
}

} // namespace detail

// The permutation that sigma induces on the lexicographically ordered
// ell-subsets of its domain.
inline Permutation induced_subset_permutation(const Permutation& sigma, int ell,
                                              const std::vector<std::vector<Point>>& table) {
    std::vector<Point> img(table.size());
    std::vector<Point> image_subset(static_cast<std::size_t>(ell));
    for (std::size_t s = 0; s < table.size(); ++s) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i)
            image_subset[i] = sigma(table[s][i]);
        std::sort(image_subset.begin(), image_subset.end());
        img[s] = static_cast<Point>(detail::lookup_subset(table, image_subset));
    }
    return Permutation::from_image(std::move(img));
}

inline LabeledDomain ksubset_domain(int n, int ell) {
    LabeledDomain d;
    for (const auto& subset : detail::enumerate_ksubsets(n, ell)) {
        std::string label = "{";
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i) label += ',';
            label += std::to_string(subset[i]);
        }
        label += '}';
        d.labels.push_back(std::move(label));
    }
    return d;
}

// Materialized induced action of an arbitrary base group on ell-subsets.
// The induced map is injective for 2 <= ell <= n-1, which is asserted.
inline FiniteGroup induced_on_ksubsets(const FiniteGroup& base, int ell) {
    const int n = base.degree();
    if (ell < 2 || ell > n - 1)
        throw std::invalid_argument("induced_on_ksubsets: need 2 <= ell <= n-1");
    const auto table = detail::enumerate_ksubsets(n, ell);
    std::vector<Permutation> gens;
    for (const auto& g : base.generators())
        gens.push_back(induced_subset_permutation(g, ell, table));
    std::vector<Permutation> elements;
    elements.reserve(base.elements().size());
    for (const auto& g : base.elements())
        elements.push_back(induced_subset_permutation(g, ell, table));
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw invariant_violation("induced_on_ksubsets: induced map is not injective");
    return FiniteGroup(static_cast<int>(table.size()), std::move(gens), std::move(elements));
}

// --- symmetric-group fast paths (no element lists) -------------------------

// Cycle-type histogram of S_n in its natural action, straight from the
// partition classes.
inline TypeHistogram symmetric_histogram(int n) {
    std::map<CycleType, BigInt> acc;
    for (auto& [ct, size] : symmetric_class_reps(n)) acc[ct] += size;
    return TypeHistogram(acc.begin(), acc.end());
}

// Cycle-type histogram of S_n acting on ell-subsets: push one representative
// per partition through the induced action and keep the class size. Only
// C(n, ell) has to stay small; n! never materializes.
inline TypeHistogram symmetric_induced_histogram(int n, int ell) {
    if (ell < 2 || ell > n - 1)
        throw std::invalid_argument("symmetric_induced_histogram: need 2 <= ell <= n-1");
    const auto table = detail::enumerate_ksubsets(n, ell);
    std::map<CycleType, BigInt> acc;
    for (auto& [ct, size] : symmetric_class_reps(n)) {
        const Permutation rep = class_representative(ct);
        acc[cycle_type(induced_subset_permutation(rep, ell, table))] += size;
    }
    return TypeHistogram(acc.begin(), acc.end());
}

// --- linear and affine groups ----------------------------------------------

inline BigInt gl_order(int d, int q) {
    if (d < 1 || q < 2) throw std::invalid_argument("gl_order: need d >= 1, q >= 2");
    const BigInt qd = int_pow(BigInt(q), static_cast<unsigned long long>(d));
    BigInt order = 1;
    BigInt qj = 1;
    for (int j = 0; j < d; ++j) {
        order *= qd - qj;
        qj *= q;
    }
    return order;
}

inline BigInt agl_order(int d, int q) {
    return int_pow(BigInt(q), static_cast<unsigned long long>(d)) * gl_order(d, q);
}

namespace detail {

// Vectors of F_q^d are numbered with coordinate 0 least significant:
// index = sum_i v_i * q^i.
inline std::vector<int> decode_vector(int index, int d, int q) {
    std::vector<int> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        v[static_cast<std::size_t>(i)] = index % q;
        index /= q;
    }
    return v;
}

inline int encode_vector(const std::vector<int>& v, int q) {
    int index = 0;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        index = index * q + v[static_cast<std::size_t>(i)];
    return index;
}

// Permutation of the q^d vectors given by v -> Av + t.
inline Permutation affine_permutation(const FieldSpec& field,
                                      const std::vector<std::vector<int>>& matrix,
                                      const std::vector<int>& shift) {
    const int d = static_cast<int>(shift.size());
    const int q = field.q();
    int npoints = 1;
    for (int i = 0; i < d; ++i) npoints *= q;
    std::vector<Point> img(static_cast<std::size_t>(npoints));
    for (int idx = 0; idx < npoints; ++idx) {
        const auto v = decode_vector(idx, d, q);
        std::vector<int> w(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            int acc = shift[static_cast<std::size_t>(i)];
            for (int j = 0; j < d; ++j)
                acc = field.add(acc, field.mul(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                               v[static_cast<std::size_t>(j)]));
            w[static_cast<std::size_t>(i)] = acc;
        }
        img[static_cast<std::size_t>(idx)] = static_cast<Point>(encode_vector(w, q));
    }
    return Permutation::from_image(std::move(img));
}

inline std::vector<std::vector<int>> identity_matrix(int d) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(d),
                                    std::vector<int>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

// Gaussian-elimination generators of GL(d, q): one transvection, one scaling
// of the first coordinate by a primitive element, one coordinate cycle.
inline std::vector<Permutation> gl_generator_perms(const FieldSpec& field, int d) {
    const int q = field.q();
    std::vector<Permutation> gens;
    const std::vector<int> zero(static_cast<std::size_t>(d), 0);

    if (field.primitive_element() != 1) {
        auto scale = identity_matrix(d);
        scale[0][0] = field.primitive_element();
        gens.push_back(affine_permutation(field, scale, zero));
    }
    if (d >= 2) {
        auto transvection = identity_matrix(d);
        transvection[0][1] = 1;
        gens.push_back(affine_permutation(field, transvection, zero));

        std::vector<std::vector<int>> cycle(static_cast<std::size_t>(d),
                                            std::vector<int>(static_cast<std::size_t>(d), 0));
        for (int i = 0; i < d; ++i)
            cycle[static_cast<std::size_t>((i + 1) % d)][static_cast<std::size_t>(i)] = 1;
        gens.push_back(affine_permutation(field, cycle, zero));
    }
    (void)q;
    return gens;
}

} // namespace detail

inline LabeledDomain vector_domain(int d, int q) {
    int npoints = 1;
    for (int i = 0; i < d; ++i) npoints *= q;
    LabeledDomain dom;
    for (int idx = 0; idx < npoints; ++idx) {
        const auto v = detail::decode_vector(idx, d, q);
        std::string label = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) label += ',';
            label += std::to_string(v[i]);
        }
        label += ')';
        dom.labels.push_back(std::move(label));
    }
    return dom;
}

// GL(d, q) acting on the q^d vectors; closure is verified against the order
// formula prod_j (q^d - q^j).
inline FiniteGroup make_GL(int d, int q, std::size_t element_cap = kDefaultElementCap) {
    const FieldSpec field(q);
    if (d < 1) throw std::invalid_argument("make_GL: need d >= 1");
    FiniteGroup g = generate_group(vector_domain(d, q).size(),
                                   detail::gl_generator_perms(field, d), element_cap);
    if (g.order() != gl_order(d, q))
        throw invariant_violation("make_GL: generated order disagrees with the formula");
    return g;
}

// AGL(d, q) = GL(d, q) extended by the translations; generated by the GL
// generators plus the shift by the first basis vector.
inline FiniteGroup make_AGL(int d, int q, std::size_t element_cap = kDefaultElementCap) {
    const FieldSpec field(q);
    if (d < 1) throw std::invalid_argument("make_AGL: need d >= 1");
    auto gens = detail::gl_generator_perms(field, d);
    std::vector<int> e1(static_cast<std::size_t>(d), 0);
    e1[0] = 1;
    gens.push_back(detail::affine_permutation(field, detail::identity_matrix(d), e1));
    FiniteGroup g = generate_group(vector_domain(d, q).size(), std::move(gens), element_cap);
    if (g.order() != agl_order(d, q))
        throw invariant_violation("make_AGL: generated order disagrees with the formula");
    return g;
}

// --- textual group specs ----------------------------------------------------

// A resolved group ready for orbit counting: always a cycle-type histogram
// plus generators and the exact order; the element list is materialized for
// every family except S:n and S:n^ell, whose histograms come from partition
// classes and stay cheap at degrees far beyond the element cap.
struct CatalogGroup {
    std::string spec;
    LabeledDomain domain;
    int degree = 0;
    std::vector<Permutation> generators;
    BigInt order;
    TypeHistogram histogram;
    std::optional<FiniteGroup> group;
    std::optional<std::pair<int, int>> affine_params; // (d, q) for GL/AGL specs
};

namespace detail {

inline int parse_int(const std::string& text, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("group spec: bad ") + what + " '" + text + "'");
    }
    if (pos != text.size() || value < 0)
        throw std::invalid_argument(std::string("group spec: bad ") + what + " '" + text + "'");
    return value;
}

inline CatalogGroup from_finite_group(std::string spec, FiniteGroup g, LabeledDomain domain) {
    CatalogGroup cg;
    cg.spec = std::move(spec);
    cg.domain = std::move(domain);
    cg.degree = g.degree();
    cg.generators = g.generators();
    cg.order = g.order();
    cg.histogram = g.type_histogram();
    cg.group = std::move(g);
    return cg;
}

} // namespace detail

// Grammar: "S:n", "S:n^ell", "A:n", "C:n", "D:n", "GL:d,q", "AGL:d,q",
// "gens:<cycles>;<cycles>;...". Degree of a gens spec is the largest point
// mentioned plus one.
inline CatalogGroup resolve_group(const std::string& spec,
                                  std::size_t element_cap = kDefaultElementCap) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
        throw std::invalid_argument("group spec: expected '<family>:<params>', got '" + spec + "'");
    const std::string family = spec.substr(0, colon);
    const std::string params = spec.substr(colon + 1);

    if (family == "S") {
        const auto caret = params.find('^');
        const int n = detail::parse_int(params.substr(0, caret), "n");
        if (caret == std::string::npos) {
            if (n < 1) throw std::invalid_argument("group spec: need n >= 1");
            CatalogGroup cg;
            cg.spec = spec;
            cg.domain = numeric_domain(n);
            cg.degree = n;
            if (n >= 2) cg.generators.push_back(parse_permutation("(0 1)", n));
            if (n >= 3) {
                std::vector<Point> cyc(static_cast<std::size_t>(n));
                std::iota(cyc.begin(), cyc.end(), Point{0});
                cg.generators.push_back(permutation_from_cycles(n, {cyc}));
            }
            cg.order = factorial(n);
            cg.histogram = symmetric_histogram(n);
            return cg;
        }
        const int ell = detail::parse_int(params.substr(caret + 1), "ell");
        if (ell < 2 || ell > n - 1)
            throw std::invalid_argument("group spec: need 2 <= ell <= n-1");
        const auto table = detail::enumerate_ksubsets(n, ell);
        CatalogGroup cg;
        cg.spec = spec;
        cg.domain = ksubset_domain(n, ell);
        cg.degree = static_cast<int>(table.size());
        std::vector<Permutation> base_gens;
        base_gens.push_back(parse_permutation("(0 1)", n));
        std::vector<Point> cyc(static_cast<std::size_t>(n));
        std::iota(cyc.begin(), cyc.end(), Point{0});
        base_gens.push_back(permutation_from_cycles(n, {cyc}));
        for (const auto& g : base_gens)
            cg.generators.push_back(induced_subset_permutation(g, ell, table));
        for (const auto& g : cg.generators)
            if (g.is_identity())
                throw invariant_violation("group spec: induced generator collapsed");
        cg.order = factorial(n);
        cg.histogram = symmetric_induced_histogram(n, ell);
        return cg;
    }
    if (family == "A") {
        const int n = detail::parse_int(params, "n");
        return detail::from_finite_group(spec, make_alternating(n, element_cap), numeric_domain(n));
    }
    if (family == "C") {
        const int n = detail::parse_int(params, "n");
        return detail::from_finite_group(spec, make_cyclic(n, element_cap), numeric_domain(n));
    }
    if (family == "D") {
        const int n = detail::parse_int(params, "n");
        return detail::from_finite_group(spec, make_dihedral(n, element_cap), numeric_domain(n));
    }
    if (family == "GL" || family == "AGL") {
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("group spec: expected '" + family + ":d,q'");
        const int d = detail::parse_int(params.substr(0, comma), "d");
        const int q = detail::parse_int(params.substr(comma + 1), "q");
        FiniteGroup g = family == "GL" ? make_GL(d, q, element_cap) : make_AGL(d, q, element_cap);
        CatalogGroup cg = detail::from_finite_group(spec, std::move(g), vector_domain(d, q));
        cg.affine_params = std::make_pair(d, q);
        return cg;
    }
    if (family == "gens") {
        std::vector<std::vector<std::vector<Point>>> cycle_lists;
        std::stringstream ss(params);
        std::string piece;
        int degree = 1;
        while (std::getline(ss, piece, ';')) {
            auto cycles = parse_cycle_string(piece);
            degree = std::max(degree, cycles_min_degree(cycles));
            cycle_lists.push_back(std::move(cycles));
        }
        if (cycle_lists.empty())
            throw std::invalid_argument("group spec: gens needs at least one permutation");
        std::vector<Permutation> gens;
        for (const auto& cycles : cycle_lists)
            gens.push_back(permutation_from_cycles(degree, cycles));
        return detail::from_finite_group(spec, generate_group(degree, std::move(gens), element_cap),
                                         numeric_domain(degree));
    }
    throw std::invalid_argument("group spec: unknown family '" + family + "'");
}

} // namespace orbitcount
