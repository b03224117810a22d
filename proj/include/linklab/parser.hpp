/**
 * @file parser.hpp
 * @brief The ideal text format:
 *
 *     ring n=<int> char=<0|p> order=<grevlex|lex|glex>
 *     x0*x3 - x1*x2        # one generator per nonempty line
 *     x1^3 - x0^2*x2
 *
 * Variables are x<k>, `^` is power, `*` is product (optional between
 * adjacent factors), coefficients are integers, `#` starts a comment.
 */
#ifndef LINKLAB_PARSER_HPP
#define LINKLAB_PARSER_HPP

#include <string>

#include "linklab/ideal.hpp"

namespace linklab {

Ideal parse_ideal_text(const std::string& text);
Ideal parse_ideal_file(const std::string& path);

/// Emit in the same format (round-trips through the parser).
std::string format_ideal_file(const Ideal& I);

std::string order_name(MonomialOrder order);
MonomialOrder order_from_name(const std::string& name);  // throws Error

}  // namespace linklab

#endif
