/**
 * @file ideal_ops.hpp
 * @brief Ideal-level operations: intersection and colon by elimination,
 *        Krull dimension from the initial ideal, regular sequences,
 *        complete-intersection detection.
 */
#ifndef LINKLAB_IDEAL_OPS_HPP
#define LINKLAB_IDEAL_OPS_HPP

#include <cstdint>
#include <vector>

#include "linklab/ideal.hpp"

namespace linklab {

struct DimensionReport {
    std::int64_t krull_dim;  // dim R/I; -1 for the unit ideal
    std::int64_t height;     // n - krull_dim for proper I
    bool is_unit;
};

/// I cap J through a tag variable: GB of t*I + (1-t)*J in an extended
/// ring with t eliminated first, intersected with the base ring. The
/// result carries its reduced Groebner basis as generators.
Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt = {});

/// I : J computed generator-by-generator as (I cap (g)) / g. The zero
/// ideal J is rejected rather than answering (1).
Ideal colon(const Ideal& I, const Ideal& J, const GBOptions& opt = {});

/// dim R/I = dim of the initial complex: the largest variable subset
/// supporting no leading monomial of the reduced GB.
DimensionReport krull_dimension(const Ideal& I, const GBOptions& opt = {});

std::int64_t height(const Ideal& I, const GBOptions& opt = {});

/// Height criterion (valid for homogeneous sequences in a polynomial
/// ring): true iff height(f_1..f_i) = i for every prefix.
bool is_regular_sequence(const std::vector<Polynomial>& fs,
                         const GBOptions& opt = {});

/// Search a homogeneous regular sequence of the given length inside I:
/// generators first, then seeded random combinations of generators scaled
/// to a common degree by single-variable monomial multipliers.
std::vector<Polynomial> find_regular_sequence_in(const Ideal& I,
                                                 std::size_t length,
                                                 std::uint64_t seed,
                                                 int degree_boost = 0,
                                                 const GBOptions& opt = {});

/// Minimal homogeneous generators by graded Nakayama: process by
/// ascending degree, keep what the earlier survivors do not generate.
std::vector<Polynomial> minimal_generators(const Ideal& I,
                                           const GBOptions& opt = {});

/// Minimal generator count equals height.
bool is_complete_intersection(const Ideal& c, const GBOptions& opt = {});

/// Generators of I followed by generators of J.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

}  // namespace linklab

#endif
