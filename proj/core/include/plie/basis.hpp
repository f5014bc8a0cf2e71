#pragma once

#include <optional>
#include <vector>

#include "plie/gradings.hpp"
#include "plie/grassmann.hpp"
#include "plie/session.hpp"

namespace plie {

/// Kind of a basis monomial of the Lie superalgebra:
///   First       r_{n-2} v_n                       (n >= 0)
///   Second      r_{n-3} x_{n-1} v_n               (n >= 2, x0x2v3 excluded)
///   PivotSquare x_{n-1} v_n = v_{n-2}^2           (n >= 2; the bare Second)
/// PivotSquare only appears as a separate kind in characteristic-2 bases.
enum class BasisKind { First, Second, PivotSquare };

struct StandardMonomial {
  BasisKind kind = BasisKind::First;
  unsigned length = 0;            // head index n
  GrassmannMonomial tail;         // full tail, neck letter included

  bool operator==(const StandardMonomial&) const = default;
  auto operator<=>(const StandardMonomial&) const = default;
};

/// The one second-kind shape that is not a basis element.
inline bool is_excluded_monomial(GrassmannMonomial tail, unsigned head) {
  return head == 3 && tail == GrassmannMonomial::from_bits(0b101);
}

/// Classify tail * v_head as a basis monomial shape; nullopt when it is not
/// one (tail reaching past the allowed window, or the excluded monomial).
/// PivotSquare is reported as Second here; the char-2 enumerations relabel.
std::optional<BasisKind> classify(GrassmannMonomial tail, unsigned head);

inline WeightVector weight_of(const StandardMonomial& m) {
  return weight_of(m.tail, m.length);
}
inline MultiDegree multidegree_of(const StandardMonomial& m) {
  return multidegree_of(m.tail, m.length);
}

/// Z2-degree of the operator tail * v_head.
inline int z2_degree(GrassmannMonomial tail, unsigned head) {
  (void)head;
  return (tail.size() + 1) & 1;
}

/// All basis monomials of length n for the session, ordered by (weight, kind).
std::vector<StandardMonomial> enumerate_by_length(unsigned n, const Ring& ring,
                                                  Variant v);

/// The unique basis monomial of the given kind and weight; nullopt when none
/// exists (Second kind at weights 1 and 3, or weight < 1).
std::optional<StandardMonomial> monomial_of_weight(long long m, BasisKind kind);

/// Weight-preserving partner of a first-kind monomial: r_{n-2} v_n maps to
/// r_{n-2} x_n v_{n+1}.  Throws for weights 1 and 3, which have no partner.
StandardMonomial partner(const StandardMonomial& first_kind);

/// Coefficient of the monomial in the integral basis: 1 for first-kind
/// monomials and bare pivot squares, 2 for the remaining second kind.
int z_form_coefficient(const StandardMonomial& m);

/// Shift endomorphism on monomials: every index moves up by one.
StandardMonomial tau_shift(const StandardMonomial& m);

}  // namespace plie
