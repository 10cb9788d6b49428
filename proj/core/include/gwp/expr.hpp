#pragma once

#include <string>
#include <string_view>

#include "gwp/element.hpp"

namespace gwp {

/// Parses the operator-expression grammar
///
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" UINT)?
///   atom   := RATIONAL | "L(" ID ")" | "Ls(" ID ")" | "V(" ID ")"
///           | "adj(" expr ")" | "(" expr ")"
///
/// and evaluates it to a normal-form element. L(x) and Ls(x) accept edge ids
/// and, for convenience, vertex ids (both denote the projection L_x). A bare
/// number n denotes n times the identity Σ_v L_v. Errors carry the byte
/// offset of the offending token.
Element parse_element_expr(std::string_view text, const Graph& g);

/// Renders an element in the same grammar, so that parsing the output gives
/// back the element. Complex coefficients are not expressible and throw.
std::string print_element(const Element& a);

/// Scalar for one-vertex graphs, otherwise an expression in V(..) atoms.
std::string print_diagonal(const DiagonalElement& d);

}  // namespace gwp
