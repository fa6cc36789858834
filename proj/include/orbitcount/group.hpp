#pragma once

// Finite permutation groups materialized as sorted element lists, produced by
// breadth-first closure over a generating set.

#include <cstddef>
#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orbitcount/errors.hpp"
#include "orbitcount/numeric.hpp"
#include "orbitcount/perm.hpp"

namespace orbitcount {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// Element counts bucketed by cycle type; the Burnside sums, support profiles
// and minimal degrees below only ever need this much of a group.
using TypeHistogram = std::vector<std::pair<CycleType, BigInt>>;

namespace detail {

struct ImageHash {
    std::size_t operator()(const std::vector<Point>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Point p : v) {
            h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline TypeHistogram histogram_of(const std::vector<Permutation>& elements) {
    std::map<CycleType, BigInt> acc;
    for (const auto& g : elements) ++acc[cycle_type(g)];
    return TypeHistogram(acc.begin(), acc.end());
}

} // namespace detail

class FiniteGroup {
public:
    // Takes ownership of an already-closed element list; generate_group is the
    // usual way in. Elements are sorted and the cycle-type histogram is fixed
    // at construction; instances are immutable afterwards.
    FiniteGroup(int degree, std::vector<Permutation> generators,
                std::vector<Permutation> elements)
        : degree_(degree),
          generators_(std::move(generators)),
          elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        order_ = BigInt(elements_.size());
        histogram_ = detail::histogram_of(elements_);
        check_lagrange();
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const BigInt& order() const { return order_; }
    const TypeHistogram& type_histogram() const { return histogram_; }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

private:
    void check_lagrange() const {
        if (elements_.empty())
            throw invariant_violation("FiniteGroup: empty element list");
        if (degree_ <= 12 && factorial(degree_) % order_ != 0)
            throw invariant_violation("FiniteGroup: order does not divide degree!");
    }

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    BigInt order_;
    TypeHistogram histogram_;
};

// Closure of the generating set under composition. Throws cap_exceeded when
// the group turns out to be larger than element_cap.
inline FiniteGroup generate_group(int degree, std::vector<Permutation> generators,
                                  std::size_t element_cap = kDefaultElementCap) {
    if (degree < 0) throw std::invalid_argument("generate_group: negative degree");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("generate_group: generator degree mismatch");

    std::unordered_set<std::vector<Point>, detail::ImageHash> seen;
    std::deque<Permutation> queue;
    std::vector<Permutation> elements;

    Permutation id(degree);
    seen.insert(id.image());
    elements.push_back(id);
    queue.push_back(std::move(id));

    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation next = compose(g, cur);
            if (seen.insert(next.image()).second) {
                if (elements.size() >= element_cap)
                    throw cap_exceeded("generate_group: group larger than element cap " +
                                       std::to_string(element_cap));
                elements.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return FiniteGroup(degree, std::move(generators), std::move(elements));
}

} // namespace orbitcount
