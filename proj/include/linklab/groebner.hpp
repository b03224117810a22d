/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm over free modules (ideals are the rank-1
 *        case), normal forms, syzygies and membership witnesses.
 *
 * One engine serves every Groebner need in the project. Syzygies and
 * lifting both go through the block construction: each column a_j of a
 * matrix A is extended to (a_j | e_j) in R^(s+k); under POT the first block
 * dominates, so GB elements with zero first block generate the syzygy
 * module of the columns, and reducing (v | 0) yields a witness q with
 * A q = v whenever v lies in the column span.
 */
#ifndef LINKLAB_GROEBNER_HPP
#define LINKLAB_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "linklab/modvec.hpp"

namespace linklab {

struct GBOptions {
    std::uint64_t pair_budget;
    GBOptions();  // default 10^6, overridable via LINKLAB_PAIR_BUDGET
};

std::uint64_t default_pair_budget();

/// Normal form against a fixed basis list; divisors are tried in list
/// order, so the result is deterministic even for non-GB input.
ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& G);

/// The unique reduced Groebner basis (monic, mutually fully reduced,
/// sorted descending under POT).
std::vector<ModVec> module_reduced_groebner(std::vector<ModVec> gens,
                                            const GBOptions& opt = {});

// ---- scalar facade -------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

std::vector<Polynomial> reduced_groebner(const RingDescriptor& ring,
                                         const std::vector<Polynomial>& gens,
                                         const GBOptions& opt = {});

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division with quotient tracking: f = sum q_i G_i + r.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G);

/// f / g when g divides f exactly; throws otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// ---- column-span computations --------------------------------------------

/// Groebner data for the span of a list of columns of R^s.
class ColumnSpanGB {
 public:
    ColumnSpanGB(const RingDescriptor& ring, std::vector<ModVec> columns,
                 const GBOptions& opt = {});

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t num_columns() const { return ncols_; }

    /// Generators of the syzygy module of the columns (elements of R^k).
    const std::vector<ModVec>& syzygies() const { return syzygies_; }

    bool contains(const ModVec& v) const;

    /// Witness q with A q = v, or nullopt when v is outside the span.
    std::optional<std::vector<Polynomial>> express(const ModVec& v) const;

 private:
    RingDescriptor ring_;
    std::size_t ambient_;
    std::size_t ncols_;
    std::vector<ModVec> extended_gb_;
    std::vector<ModVec> syzygies_;
};

/// Convenience: just the syzygy generators of the given columns.
std::vector<ModVec> syzygy_generators(const RingDescriptor& ring,
                                      const std::vector<ModVec>& columns,
                                      const GBOptions& opt = {});

}  // namespace linklab

#endif
