#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/monomial.hpp"
#include "fano/poly.hpp"
#include "fano/rational.hpp"

namespace fano {

/// Reads one homogeneous form. Grammar:
///   poly    := ['+'|'-'] term (('+'|'-') term)*
///   term    := coeff ['*' monomial] | monomial
///   coeff   := int ['/' int]
///   monomial:= factor ('*' factor)*,  factor := var ['^' int]
/// Variables are x0..x2, d0..d2, z0..z3, w0..w3; all must belong to `ring`.
MultiPoly<Rational> parse_poly(std::string_view text, RingTag ring);

/// As above, with the ring taken from the first variable. A constant needs an
/// explicit ring.
MultiPoly<Rational> parse_poly(std::string_view text);

/// Ring named by a variable prefix letter.
std::optional<RingTag> ring_from_prefix(char c);

/// Splits a document into polynomial texts: one per non-empty line or per ';'.
/// '#' starts a comment.
std::vector<std::string> split_polys(std::string_view text);

}  // namespace fano
