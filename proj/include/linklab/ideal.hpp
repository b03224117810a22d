/**
 * @file ideal.hpp
 * @brief Ideals: generator list plus a lazily cached reduced Groebner basis.
 */
#ifndef LINKLAB_IDEAL_HPP
#define LINKLAB_IDEAL_HPP

#include <memory>
#include <vector>

#include "linklab/groebner.hpp"

namespace linklab {

class Ideal {
 public:
    /// Zero generators are dropped; the homogeneity flag is computed from
    /// the generators as given.
    Ideal(RingDescriptor ring, std::vector<Polynomial> gens);

    /// Wraps a basis already known to be the reduced GB (cache pre-filled).
    static Ideal from_groebner(RingDescriptor ring,
                               std::vector<Polynomial> gb);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool homogeneous() const { return homogeneous_; }

    /// The unique reduced Groebner basis for the ring's order; computed on
    /// first use and cached. Distinct Ideal values may be used from
    /// different threads; a single value must not.
    const std::vector<Polynomial>& groebner_basis(
        const GBOptions& opt = {}) const;

    bool is_zero_ideal() const { return groebner_basis().empty(); }
    bool is_unit_ideal() const;

    std::int64_t max_generator_degree() const;

 private:
    RingDescriptor ring_;
    std::vector<Polynomial> gens_;
    bool homogeneous_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

/// f lies in I, decided by normal form against the reduced GB.
bool contains(const Ideal& I, const Polynomial& f);

/// Ideal equality via identical reduced Groebner bases.
bool ideals_equal(const Ideal& I, const Ideal& J);

}  // namespace linklab

#endif
