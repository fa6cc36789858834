#pragma once

// Small finite fields F_q for q <= 16, as dense add/mul tables. Prime fields
// use arithmetic mod p; the four prime-power cases use a fixed irreducible
// polynomial each, with field elements encoded as base-p digit strings
// (least significant digit = constant term). The tables are verified against
// the field axioms at construction.

#include <array>
#include <vector>

#include "orbitcount/errors.hpp"

namespace orbitcount {

class FieldSpec {
public:
    explicit FieldSpec(int q) : q_(q) {
        init_shape();
        build_tables();
        check_axioms();
        find_primitive();
    }

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int extension_degree() const { return e_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int inv(int a) const {
        if (check(a) == 0) throw std::domain_error("FieldSpec: inverse of zero");
        return inv_[a];
    }

    // Generator of the multiplicative group.
    int primitive_element() const { return primitive_; }

private:
    void init_shape() {
        static constexpr std::array<int, 4> prime_powers = {4, 8, 9, 16};
        for (int p : {2, 3, 5, 7, 11, 13}) {
            if (q_ == p) {
                p_ = p;
                e_ = 1;
                return;
            }
        }
        for (int pp : prime_powers) {
            if (q_ == pp) {
                p_ = (q_ == 9) ? 3 : 2;
                e_ = (q_ == 4 || q_ == 9) ? 2 : (q_ == 8 ? 3 : 4);
                return;
            }
        }
        throw std::invalid_argument("FieldSpec: q must be a prime power <= 16");
    }

    // Fixed irreducibles: x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+2x+2 over
    // F_3, x^4+x+1 over F_2. Returned as the digit encoding of x^e, i.e. the
    // reduction of the leading term.
    int reduction_digits() const {
        switch (q_) {
            case 4: return 1 + 1 * p_;                    // x^2 = x + 1
            case 8: return 1 + 1 * p_;                    // x^3 = x + 1
            case 9: return neg_digit(2) + neg_digit(2) * p_; // x^2 = -2x - 2 = x + 1 mod 3
            case 16: return 1 + 1 * p_;                   // x^4 = x + 1
            default: return 0;
        }
    }

    int neg_digit(int d) const { return (p_ - d % p_) % p_; }

    void build_tables() {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        neg_.assign(static_cast<std::size_t>(q_), 0);
        inv_.assign(static_cast<std::size_t>(q_), 0);

        auto digits = [&](int a) {
            std::vector<int> d(static_cast<std::size_t>(e_));
            for (int i = 0; i < e_; ++i) {
                d[static_cast<std::size_t>(i)] = a % p_;
                a /= p_;
            }
            return d;
        };
        auto encode = [&](const std::vector<int>& d) {
            int a = 0;
            for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
            return a;
        };

        const std::vector<int> red = digits(reduction_digits());
        for (int a = 0; a < q_; ++a) {
            const auto da = digits(a);
            std::vector<int> dn(static_cast<std::size_t>(e_));
            for (int i = 0; i < e_; ++i) dn[static_cast<std::size_t>(i)] = neg_digit(da[static_cast<std::size_t>(i)]);
            neg_[static_cast<std::size_t>(a)] = encode(dn);
            for (int b = 0; b < q_; ++b) {
                const auto db = digits(b);
                std::vector<int> sum(static_cast<std::size_t>(e_));
                for (int i = 0; i < e_; ++i)
                    sum[static_cast<std::size_t>(i)] =
                        (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
                add_[idx(a, b)] = encode(sum);

                // Polynomial product, then reduce x^e -> red repeatedly.
                std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
                for (int i = 0; i < e_; ++i)
                    for (int j = 0; j < e_; ++j)
                        prod[static_cast<std::size_t>(i + j)] =
                            (prod[static_cast<std::size_t>(i + j)] +
                             da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
                for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
                    const int coeff = prod[static_cast<std::size_t>(deg)];
                    if (coeff == 0) continue;
                    prod[static_cast<std::size_t>(deg)] = 0;
                    for (int i = 0; i < e_; ++i)
                        prod[static_cast<std::size_t>(deg - e_ + i)] =
                            (prod[static_cast<std::size_t>(deg - e_ + i)] +
                             coeff * red[static_cast<std::size_t>(i)]) % p_;
                }
                prod.resize(static_cast<std::size_t>(e_));
                mul_[idx(a, b)] = encode(prod);
            }
        }

        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
    }

    void check_axioms() const {
        for (int a = 0; a < q_; ++a) {
            if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0)
                throw invariant_violation("FieldSpec: identity axiom failed");
            if (add(a, neg(a)) != 0)
                throw invariant_violation("FieldSpec: additive inverse failed");
            if (a != 0 && mul(a, inv_[static_cast<std::size_t>(a)]) != 1)
                throw invariant_violation("FieldSpec: multiplicative inverse failed");
            for (int b = 0; b < q_; ++b) {
                if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                    throw invariant_violation("FieldSpec: commutativity failed");
                for (int c = 0; c < q_; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c)) ||
                        mul(mul(a, b), c) != mul(a, mul(b, c)) ||
                        mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                        throw invariant_violation("FieldSpec: ring axiom failed");
                }
            }
        }
    }

    void find_primitive() {
        for (int g = 1; g < q_; ++g) {
            int x = g;
            int order = 1;
            while (x != 1) {
                x = mul(x, g);
                ++order;
            }
            if (order == q_ - 1) {
                primitive_ = g;
                return;
            }
        }
        throw invariant_violation("FieldSpec: no primitive element found");
    }

    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(check(a)) * q_ + check(b);
    }

    int check(int a) const {
        if (a < 0 || a >= q_) throw std::out_of_range("FieldSpec: element out of range");
        return a;
    }

    int q_;
    int p_ = 0;
    int e_ = 0;
    int primitive_ = 1;
    std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace orbitcount
