#include "linklab/ideal.hpp"

namespace linklab {

Ideal::Ideal(RingDescriptor ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), homogeneous_(true) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        require_same_ring(ring_, g.ring());
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) homogeneous_ = false;
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::from_groebner(RingDescriptor ring, std::vector<Polynomial> gb) {
    Ideal I(std::move(ring), std::move(gb));
    I.gb_ = std::make_shared<const std::vector<Polynomial>>(I.gens_);
    return I;
}

const std::vector<Polynomial>& Ideal::groebner_basis(
    const GBOptions& opt) const {
    if (!gb_)
        gb_ = std::make_shared<const std::vector<Polynomial>>(
            reduced_groebner(ring_, gens_, opt));
    return *gb_;
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::int64_t Ideal::max_generator_degree() const {
    std::int64_t d = -1;
    for (const Polynomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool contains(const Ideal& I, const Polynomial& f) {
    require_same_ring(I.ring(), f.ring());
    if (f.is_zero()) return true;
    return normal_form(f, I.groebner_basis()).is_zero();
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    return I.groebner_basis() == J.groebner_basis();
}

}  // namespace linklab
