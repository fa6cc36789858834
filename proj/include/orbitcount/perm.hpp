#pragma once

// Permutations of {0, ..., n-1} as explicit image tables, their cycle types,
// and cycle-notation input/output ("(0 1)(2 3 4)", identity "()").

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitcount {

using Point = std::uint32_t;

class Permutation {
public:
    // Identity on {0, ..., degree-1}.
    explicit Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
        if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
        std::iota(img_.begin(), img_.end(), Point{0});
    }

    static Permutation from_image(std::vector<Point> image) {
        std::vector<bool> seen(image.size(), false);
        for (Point p : image) {
            if (p >= image.size() || seen[p])
                throw std::invalid_argument("Permutation: image table is not a bijection");
            seen[p] = true;
        }
        Permutation result(0);
        result.img_ = std::move(image);
        return result;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    Point operator()(Point i) const { return img_[i]; }
    const std::vector<Point>& image() const { return img_; }

    bool is_identity() const {
        for (Point i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<Point> img_;
};

// Composition acts left-of-right: compose(p, q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<Point> img(p.image().size());
    for (Point i = 0; i < img.size(); ++i) img[i] = p(q(i));
    return Permutation::from_image(std::move(img));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
    return compose(p, q);
}

inline Permutation inverse(const Permutation& p) {
    std::vector<Point> img(p.image().size());
    for (Point i = 0; i < img.size(); ++i) img[p(i)] = i;
    return Permutation::from_image(std::move(img));
}

// Multiset of cycle lengths, stored as length -> multiplicity (absent = 0).
struct CycleType {
    int n = 0;
    std::map<int, int> counts;

    int fixed_points() const {
        auto it = counts.find(1);
        return it == counts.end() ? 0 : it->second;
    }

    int cycle_count() const {
        int c = 0;
        for (auto& [k, j] : counts) c += j;
        return c;
    }

    int multiplicity(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }

    bool operator==(const CycleType& o) const { return n == o.n && counts == o.counts; }
    bool operator<(const CycleType& o) const {
        if (n != o.n) return n < o.n;
        return std::lexicographical_compare(counts.begin(), counts.end(),
                                            o.counts.begin(), o.counts.end());
    }
};

inline CycleType cycle_type(const Permutation& p) {
    CycleType ct;
    ct.n = p.degree();
    std::vector<bool> seen(p.image().size(), false);
    for (Point i = 0; i < p.image().size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (Point j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        ++ct.counts[len];
    }
    return ct;
}

// Number of points moved.
inline int support_size(const CycleType& ct) { return ct.n - ct.fixed_points(); }

inline int support_size(const Permutation& p) {
    int s = 0;
    for (Point i = 0; i < p.image().size(); ++i)
        if (p(i) != i) ++s;
    return s;
}

// Number of points where p and q disagree; support_size(p) is the distance to
// the identity.
inline int hamming_distance(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("hamming_distance: degree mismatch");
    int d = 0;
    for (Point i = 0; i < p.image().size(); ++i)
        if (p(i) != q(i)) ++d;
    return d;
}

// Cycle-notation parsing. Accepts "(0 1)(2 3 4)" with arbitrary whitespace,
// commas as separators, and "()" for the identity.
inline std::vector<std::vector<Point>> parse_cycle_string(const std::string& text) {
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    auto skip_blank = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_blank();
    if (i == text.size())
        throw std::invalid_argument("parse_cycle_string: empty input");
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("parse_cycle_string: expected '('");
        ++i;
        std::vector<Point> cyc;
        for (;;) {
            skip_blank();
            if (i == text.size())
                throw std::invalid_argument("parse_cycle_string: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("parse_cycle_string: expected point or ')'");
            unsigned long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<unsigned long>(text[i] - '0');
                if (v > 0xffffffffUL)
                    throw std::invalid_argument("parse_cycle_string: point out of range");
                ++i;
            }
            cyc.push_back(static_cast<Point>(v));
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_blank();
    }
    return cycles;
}

inline Permutation permutation_from_cycles(int degree,
                                           const std::vector<std::vector<Point>>& cycles) {
    Permutation id(degree);
    std::vector<Point> img(id.image());
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cyc : cycles) {
        for (Point p : cyc) {
            if (p >= static_cast<Point>(degree))
                throw std::invalid_argument("permutation_from_cycles: point exceeds degree");
            if (used[p])
                throw std::invalid_argument("permutation_from_cycles: repeated point");
            used[p] = true;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    return Permutation::from_image(std::move(img));
}

inline Permutation parse_permutation(const std::string& text, int degree) {
    return permutation_from_cycles(degree, parse_cycle_string(text));
}

// Smallest degree on which the given cycles make sense.
inline int cycles_min_degree(const std::vector<std::vector<Point>>& cycles) {
    Point hi = 0;
    bool any = false;
    for (const auto& cyc : cycles)
        for (Point p : cyc) {
            any = true;
            hi = std::max(hi, p);
        }
    return any ? static_cast<int>(hi) + 1 : 0;
}

// Fixed points are omitted; the identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.image().size(), false);
    bool wrote = false;
    for (Point i = 0; i < p.image().size(); ++i) {
        if (seen[i] || p(i) == i) {
            seen[i] = true;
            continue;
        }
        out << '(';
        bool first = true;
        for (Point j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << ')';
        wrote = true;
    }
    if (!wrote) return "()";
    return out.str();
}

} // namespace orbitcount
