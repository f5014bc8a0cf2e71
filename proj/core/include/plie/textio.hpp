#pragma once

#include <string>
#include <string_view>

#include "plie/operators.hpp"

namespace plie {

class HullElement;

/// Text form of an element: terms "c·tail·v{n}" joined by " + ", with the
/// sign carried by the coefficient, e.g. "-1·x0·v2" or "2·v3 + -1·x0x1·v4".
/// The zero element prints as "0".
std::string to_text(const Element& e);

/// Inverse of to_text.  Accepts '*' as a separator synonym and plain pivot
/// or tail terms without an explicit coefficient ("v0", "x0x1·v3", "-v2").
/// Throws std::invalid_argument on malformed input.
Element parse_element(const Ring& ring, std::string_view text);

std::string term_text(const Scalar& c, GrassmannMonomial tail, unsigned head);

}  // namespace plie
