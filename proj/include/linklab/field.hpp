/**
 * @file field.hpp
 * @brief Exact coefficient arithmetic over F_p (machine-word prime) and Q.
 */
#ifndef LINKLAB_FIELD_HPP
#define LINKLAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "linklab/errors.hpp"

namespace linklab {

/// A field element: residue in [0,p) for prime fields, exact rational for Q.
/// Dumb value; all arithmetic goes through the owning Field.
class Coeff {
 public:
    Coeff() : v_(std::uint64_t{0}) {}

    static Coeff residue(std::uint64_t r) { return Coeff(r); }
    static Coeff rational(mpq_class q) { return Coeff(std::move(q)); }

    bool holds_residue() const { return std::holds_alternative<std::uint64_t>(v_); }
    std::uint64_t as_residue() const { return std::get<std::uint64_t>(v_); }
    const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }

    bool operator==(const Coeff& o) const { return v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

 private:
    explicit Coeff(std::uint64_t r) : v_(r) {}
    explicit Coeff(mpq_class q) : v_(std::move(q)) {}
    std::variant<std::uint64_t, mpq_class> v_;
};

/// Coefficient field descriptor: F_p (p a machine-word prime) or Q.
class Field {
 public:
    static Field rationals() { return Field(0); }
    static Field prime_field(std::uint64_t p);  // throws unless p is prime

    bool is_rationals() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(std::int64_t k) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;
    Coeff pow(const Coeff& a, std::uint64_t e) const;

    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;

    std::string to_string(const Coeff& a) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

 private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 means Q
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace linklab

#endif
