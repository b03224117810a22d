#include "linklab/monomial.hpp"

namespace linklab {

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        std::int32_t d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

// grevlex tie-break: the last nonzero entry of a-b negative means a > b
std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.num_vars(); i-- > 0;) {
        std::int32_t d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order) {
    if (a.num_vars() != b.num_vars())
        throw DimensionError("compare_monomials: exponent lengths differ");
    switch (order) {
        case MonomialOrder::lex:
            return lex_compare(a, b);
        case MonomialOrder::glex: {
            auto da = a.total_degree(), db = b.total_degree();
            if (da != db) return da <=> db;
            return lex_compare(a, b);
        }
        case MonomialOrder::grevlex:
        default: {
            auto da = a.total_degree(), db = b.total_degree();
            if (da != db) return da <=> db;
            return revlex_tiebreak(a, b);
        }
    }
}

}  // namespace linklab
