/**
 * @file modvec.hpp
 * @brief Elements of a free module R^s with position-over-term ordering
 *        (e_0 > e_1 > ...; ties broken by the ring's monomial order).
 */
#ifndef LINKLAB_MODVEC_HPP
#define LINKLAB_MODVEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linklab/polynomial.hpp"

namespace linklab {

struct ModLead {
    std::size_t pos;
    Term term;
};

class ModVec {
 public:
    ModVec(RingDescriptor ring, std::size_t rank)
        : ring_(std::move(ring)), comps_(rank, Polynomial(ring_)) {}

    static ModVec unit(const RingDescriptor& ring, std::size_t rank,
                       std::size_t pos) {
        ModVec v(ring, rank);
        v.comps_[pos] = Polynomial::constant(ring, ring.field().one());
        return v;
    }

    static ModVec from_components(std::vector<Polynomial> comps) {
        if (comps.empty()) throw DimensionError("ModVec needs a ring; rank 0 "
                                                "requires the explicit ctor");
        ModVec v(comps[0].ring(), 0);
        for (const Polynomial& p : comps) require_same_ring(p.ring(), v.ring_);
        v.comps_ = std::move(comps);
        return v;
    }

    static ModVec from_polynomial(Polynomial p) {
        ModVec v(p.ring(), 1);
        v.comps_[0] = std::move(p);
        return v;
    }

    const RingDescriptor& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& comp(std::size_t i) const { return comps_[i]; }
    Polynomial& comp(std::size_t i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const {
        for (const Polynomial& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Leading (position, term) under POT; throws on the zero vector.
    ModLead lead() const {
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (!comps_[i].is_zero()) return {i, comps_[i].leading()};
        throw ZeroPolynomialError("lead of zero module element");
    }

    ModVec operator+(const ModVec& o) const {
        check_shape(o);
        ModVec r(ring_, rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r.comps_[i] = comps_[i] + o.comps_[i];
        return r;
    }

    ModVec operator-(const ModVec& o) const {
        check_shape(o);
        ModVec r(ring_, rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r.comps_[i] = comps_[i] - o.comps_[i];
        return r;
    }

    ModVec term_mul(const Coeff& c, const Monomial& m) const {
        ModVec r(ring_, rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r.comps_[i] = comps_[i].term_mul(c, m);
        return r;
    }

    ModVec scalar_mul(const Coeff& c) const {
        ModVec r(ring_, rank());
        for (std::size_t i = 0; i < rank(); ++i)
            r.comps_[i] = comps_[i].scalar_mul(c);
        return r;
    }

    ModVec monic() const {
        if (is_zero()) return *this;
        return scalar_mul(ring_.field().inv(lead().term.coeff));
    }

    bool operator==(const ModVec& o) const {
        return ring_ == o.ring_ && comps_ == o.comps_;
    }
    bool operator!=(const ModVec& o) const { return !(*this == o); }

    /// Degree of a homogeneous vector under ambient degree labels.
    /// Throws NonHomogeneousError when entries disagree.
    std::int64_t graded_degree(const std::vector<std::int64_t>& labels) const;
    bool is_homogeneous(const std::vector<std::int64_t>& labels) const;

    std::string to_string() const;

 private:
    void check_shape(const ModVec& o) const {
        require_same_ring(ring_, o.ring_);
        if (rank() != o.rank())
            throw DimensionError("module vector ranks differ");
    }
    RingDescriptor ring_;
    std::vector<Polynomial> comps_;
};

}  // namespace linklab

#endif
