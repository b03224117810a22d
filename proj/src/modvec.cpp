#include "linklab/modvec.hpp"

namespace linklab {

std::int64_t ModVec::graded_degree(
    const std::vector<std::int64_t>& labels) const {
    if (labels.size() != rank())
        throw DimensionError("degree label count does not match rank");
    bool seen = false;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        const Polynomial& p = comps_[i];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous())
            throw NonHomogeneousError("module entry is not homogeneous");
        std::int64_t d = p.degree() + labels[i];
        if (!seen) {
            deg = d;
            seen = true;
        } else if (d != deg) {
            throw NonHomogeneousError("module entries have mixed degrees");
        }
    }
    if (!seen) throw ZeroPolynomialError("degree of zero module element");
    return deg;
}

bool ModVec::is_homogeneous(const std::vector<std::int64_t>& labels) const {
    if (is_zero()) return true;
    try {
        graded_degree(labels);
        return true;
    } catch (const NonHomogeneousError&) {
        return false;
    }
}

std::string ModVec::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i) out += ", ";
        out += comps_[i].to_string();
    }
    return out + ")";
}

}  // namespace linklab
