#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>

#include "plie/grassmann.hpp"
#include "plie/session.hpp"

namespace plie {

/// Weight coordinates (Z1, Z2) = (wt, swt).  Additive on products of
/// monomials; wt(v_n) = 2^n and swt(v_n) = (-1)^n, with the opposite signs on
/// the letters x_n.
struct WeightVector {
  long long wt = 0;
  long long swt = 0;
  bool operator==(const WeightVector&) const = default;
  WeightVector operator+(const WeightVector& o) const {
    return {wt + o.wt, swt + o.swt};
  }
  WeightVector operator-(const WeightVector& o) const {
    return {wt - o.wt, swt - o.swt};
  }
};

/// Multidegree coordinates (X1, X2) = degrees in the two generators.
struct MultiDegree {
  long long x1 = 0;
  long long x2 = 0;
  bool operator==(const MultiDegree&) const = default;
  auto operator<=>(const MultiDegree&) const = default;
  MultiDegree operator+(const MultiDegree& o) const {
    return {x1 + o.x1, x2 + o.x2};
  }
  long long degree() const { return x1 + x2; }
};

inline long long pow2ll(unsigned n) {
  assert(n < 63 && "weight exceeds the machine range");
  return 1ll << n;
}
inline int alt_sign(unsigned n) { return (n & 1) ? -1 : +1; }

inline WeightVector pivot_weight(unsigned n) { return {pow2ll(n), alt_sign(n)}; }
inline WeightVector letter_weight(unsigned i) {
  return {-pow2ll(i), -alt_sign(i)};
}

/// Weight of a monomial tail * v_head.
WeightVector weight_of(GrassmannMonomial tail, unsigned head);

/// Weight contribution of a set of letters (sum of letter weights).
WeightVector letters_weight(GrassmannMonomial letters);

/// Weight -> multidegree conversion: X1 = (Z1+2Z2)/3, X2 = (Z1-Z2)/3.
/// nullopt when the preimage is not an integer lattice point.
std::optional<MultiDegree> multidegree_from_weight(WeightVector w);

/// Multidegree -> weight: Z1 = X1+2X2, Z2 = X1-X2.
inline WeightVector weight_from_multidegree(MultiDegree d) {
  return {d.x1 + 2 * d.x2, d.x1 - d.x2};
}

MultiDegree multidegree_of(GrassmannMonomial tail, unsigned head);

/// Image of a multidegree under the shift endomorphism x_i -> x_{i+1}.
inline MultiDegree tau_multidegree(MultiDegree d) {
  return {2 * d.x2, d.x1 + d.x2};
}

enum class Component { Plus, Zero, Minus };

inline Component triangular_component(WeightVector w) {
  if (w.swt > 0) return Component::Plus;
  if (w.swt < 0) return Component::Minus;
  return Component::Zero;
}

/// Degree n1+n2 read off weight coordinates; asserts integrality.
long long degree_from_weight(WeightVector w);

/// dim R_n for the degree N-gradation (= lower central series factor),
/// computed by direct basis enumeration.  Intended for desk-scale n; the
/// growth module computes the same numbers by lattice substitution.
long long degree_dimension(long long n, const Ring& ring, Variant v);

/// Exact comparisons against the two logarithmic corridor curves:
/// -log2(Z1)/2 - 5/2 < Z2 < log2(Z1)/2 + 2 for the Lie superalgebra and
/// |Z2| < log2(Z1) + 3 for the associative hull.
bool inside_lie_corridor(WeightVector w);
bool inside_hull_corridor(WeightVector w);

}  // namespace plie
