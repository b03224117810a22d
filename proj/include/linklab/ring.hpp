/**
 * @file ring.hpp
 * @brief Ring descriptor: variable count, coefficient field, monomial order.
 *
 * A descriptor may carry trailing auxiliary variables forming an elimination
 * block (compared first, by total degree then grevlex); these exist only
 * inside intersection/colon computations and never face the user.
 */
#ifndef LINKLAB_RING_HPP
#define LINKLAB_RING_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "linklab/field.hpp"
#include "linklab/monomial.hpp"

namespace linklab {

class RingDescriptor {
 public:
    RingDescriptor(std::size_t num_vars, Field field, MonomialOrder order)
        : n_(num_vars), field_(field), order_(order) {
        if (num_vars < 1)
            throw PreconditionError("ring needs at least one variable");
    }

    std::size_t num_vars() const { return n_; }
    const Field& field() const { return field_; }
    MonomialOrder order() const { return order_; }
    std::size_t elim_tail() const { return elim_tail_; }
    std::size_t base_vars() const { return n_ - elim_tail_; }

    /// Same ring with `extra` trailing aux variables eliminated first.
    RingDescriptor extended_with_tail(std::size_t extra) const {
        RingDescriptor r(n_ + extra, field_, order_);
        r.elim_tail_ = elim_tail_ + extra;
        return r;
    }

    std::string var_name(std::size_t i) const {
        if (i < base_vars()) return "x" + std::to_string(i);
        return "t" + std::to_string(i - base_vars());
    }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.num_vars() != n_ || b.num_vars() != n_)
            throw DimensionError("monomial does not belong to this ring");
        if (elim_tail_ == 0) return compare_monomials(a, b, order_);
        // product order: aux block (total degree, then revlex) beats base
        std::int64_t da = 0, db = 0;
        for (std::size_t i = base_vars(); i < n_; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da <=> db;
        for (std::size_t i = n_; i-- > base_vars();) {
            std::int32_t d = a.exponent(i) - b.exponent(i);
            if (d != 0) return d < 0 ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
        }
        Monomial ha(base_vars()), hb(base_vars());
        for (std::size_t i = 0; i < base_vars(); ++i) {
            ha.exponent(i) = a.exponent(i);
            hb.exponent(i) = b.exponent(i);
        }
        return compare_monomials(ha, hb, order_);
    }

    bool operator==(const RingDescriptor& o) const {
        return n_ == o.n_ && field_ == o.field_ && order_ == o.order_ &&
               elim_tail_ == o.elim_tail_;
    }
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

 private:
    std::size_t n_;
    Field field_;
    MonomialOrder order_;
    std::size_t elim_tail_ = 0;
};

inline void require_same_ring(const RingDescriptor& a,
                              const RingDescriptor& b) {
    if (a != b) throw RingMismatchError("operands live in different rings");
}

}  // namespace linklab

#endif
