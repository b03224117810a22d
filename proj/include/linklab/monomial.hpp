/**
 * @file monomial.hpp
 * @brief Exponent vectors and the supported monomial orders.
 */
#ifndef LINKLAB_MONOMIAL_HPP
#define LINKLAB_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "linklab/errors.hpp"

namespace linklab {

enum class MonomialOrder { grevlex, lex, glex };

class Monomial {
 public:
    explicit Monomial(std::size_t n) : e_(n, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t n) { return Monomial(n); }
    static Monomial variable(std::size_t n, std::size_t i,
                             std::int32_t exp = 1) {
        Monomial m(n);
        m.e_[i] = exp;
        return m;
    }

    std::size_t num_vars() const { return e_.size(); }
    std::int32_t exponent(std::size_t i) const { return e_[i]; }
    std::int32_t& exponent(std::size_t i) { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e_)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& o) const {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& o) const {
        check_same(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_same(o);
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    /// Exact quotient this / o; o must divide this.
    Monomial divide_exact(const Monomial& o) const {
        check_same(o);
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = e_[i] - o.e_[i];
            if (r.e_[i] < 0) throw Error("divide_exact: not divisible");
        }
        return r;
    }

    Monomial pow(std::int32_t k) const {
        Monomial r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same(b);
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }

    /// Bitmask of variables with positive exponent; requires n <= 64.
    std::uint64_t support_mask() const {
        if (e_.size() > 64) throw DimensionError("support_mask: n > 64");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) m |= std::uint64_t{1} << i;
        return m;
    }

    bool is_squarefree() const {
        for (auto x : e_)
            if (x > 1) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
    void check_same(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw DimensionError("monomial exponent lengths differ");
    }
    std::vector<std::int32_t> e_;
};

/// Total order on same-length monomials under the given order.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order);

}  // namespace linklab

#endif
