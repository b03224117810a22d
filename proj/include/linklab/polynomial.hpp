/**
 * @file polynomial.hpp
 * @brief Exact multivariate polynomials; terms kept sorted descending under
 *        the ring's order, never a zero coefficient.
 */
#ifndef LINKLAB_POLYNOMIAL_HPP
#define LINKLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linklab/ring.hpp"

namespace linklab {

struct Term {
    Coeff coeff;
    Monomial mono;

    bool operator==(const Term& o) const {
        return coeff == o.coeff && mono == o.mono;
    }
    bool operator!=(const Term& o) const { return !(*this == o); }
};

class Polynomial {
 public:
    /// The zero polynomial.
    explicit Polynomial(RingDescriptor ring) : ring_(std::move(ring)) {}

    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    static Polynomial make(RingDescriptor ring, std::vector<Term> terms);

    static Polynomial constant(const RingDescriptor& ring, const Coeff& c);
    static Polynomial constant(const RingDescriptor& ring, std::int64_t k);
    static Polynomial variable(const RingDescriptor& ring, std::size_t i,
                               std::int32_t exp = 1);
    static Polynomial from_monomial(const RingDescriptor& ring, const Coeff& c,
                                    Monomial m);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    /// Maximal term under the ring's order; throws on the zero polynomial.
    const Term& leading() const {
        if (terms_.empty())
            throw ZeroPolynomialError("leading term of zero polynomial");
        return terms_.front();
    }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;
    bool is_homogeneous() const;
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    /// True when the polynomial is c*m for a single monomial m.
    bool is_term() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scalar_mul(const Coeff& c) const;
    /// c * m * this.
    Polynomial term_mul(const Coeff& c, const Monomial& m) const;
    Polynomial monic() const;
    Polynomial pow(std::uint64_t e) const;

    std::string to_string() const;

 private:
    RingDescriptor ring_;
    std::vector<Term> terms_;
};

/// Fused h - c * m * g via one sorted merge (the division workhorse).
Polynomial axpy_sub(const Polynomial& h, const Coeff& c, const Monomial& m,
                    const Polynomial& g);

}  // namespace linklab

#endif
