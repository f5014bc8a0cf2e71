#pragma once

#include <stdexcept>
#include <string>

#include "plie/scalars.hpp"

namespace plie {

/// Flavor of the algebra under study.  The Lie/Super distinction only changes
/// anything in characteristic 2; ZForm is the integral form and requires
/// characteristic 0.
enum class Variant { Lie, Super, Restricted, ZForm };

std::string variant_name(Variant v);

/// Which monomial families form a basis for the given session.
/// First-kind monomials are always present; second-kind monomials serve every
/// characteristic except 2, where the Super/Restricted algebras pick up the
/// pivot squares instead and the plain Lie algebra takes nothing extra.
struct BasisFamilies {
  bool second = false;
  bool squares = false;
};

inline BasisFamilies basis_families(const Ring& ring, Variant v) {
  if (v == Variant::ZForm && ring.characteristic() != 0) {
    throw std::invalid_argument("ZForm requires characteristic 0");
  }
  if (ring.characteristic() != 2) return {.second = true, .squares = false};
  switch (v) {
    case Variant::Lie:
      return {.second = false, .squares = false};
    case Variant::Super:
    case Variant::Restricted:
      return {.second = false, .squares = true};
    case Variant::ZForm:
      break;
  }
  throw std::invalid_argument("bad variant for characteristic 2");
}

}  // namespace plie
