#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "plie/grassmann.hpp"
#include "plie/gradings.hpp"
#include "plie/scalars.hpp"

namespace plie {

/// Key of one normal-form term: tail * v_head.  The pivot derivation v_n is
/// the full recursive operator d_n + x_n x_{n+1} v_{n+2}; keeping it folded
/// is what makes every element a finite exact sum.
struct PivotKey {
  std::uint32_t head = 0;
  GrassmannMonomial tail;

  bool operator==(const PivotKey&) const = default;
  auto operator<=>(const PivotKey&) const = default;

  int z2_degree() const { return (tail.size() + 1) & 1; }
  WeightVector weight() const { return weight_of(tail, head); }
};

/// Exact element of the Lie superalgebra in tail-times-pivot normal form.
class Element {
 public:
  explicit Element(const Ring& ring) : ring_(ring) {}

  static Element zero(const Ring& ring) { return Element(ring); }
  static Element pivot(const Ring& ring, unsigned n);
  static Element monomial(const Ring& ring, GrassmannMonomial tail,
                          unsigned head);
  static Element monomial(const Ring& ring, GrassmannMonomial tail,
                          unsigned head, Scalar coeff);

  const Ring& ring() const { return ring_; }
  const std::map<PivotKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add(const PivotKey& key, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  bool operator==(const Element& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }

  /// Z2-degree when all terms agree; nullopt for non-homogeneous elements.
  /// The zero element reports degree 0.
  std::optional<int> z2_degree() const;

  int max_head() const;    // -1 when zero
  int max_letter() const;  // largest tail index, -1 when none

 private:
  Ring ring_;
  std::map<PivotKey, Scalar> terms_;
};

/// Supercommutator of the two elements, in normal form.
Element bracket(const Element& u, const Element& w);

/// Square of an odd element: (1/2)[u,u] away from characteristic 2, the
/// formal square expansion in characteristic 2.  Rejects non-homogeneous and
/// even input.
Element square(const Element& u);

/// Finite rewriting of v_n as pure derivations up to the limit m, plus one
/// trailing pivot term: v_n = sum x_n..x_{k-1} d_k + x_n..x_{m'-1} v_{m'}.
struct PivotExpansion {
  std::vector<std::pair<GrassmannMonomial, unsigned>> partials;  // prefix, k
  GrassmannMonomial trailing_tail;
  unsigned trailing_head = 0;
};
PivotExpansion pivot_expand(unsigned n, unsigned m);  // requires m > n

/// [v_n, v_m] as coeff * monomial * v_head (the closed product form).
struct PivotBracket {
  int coeff;  // +2 or -1
  GrassmannMonomial letters;
  unsigned head;
};
PivotBracket pivot_pair_bracket(unsigned n, unsigned m);

/// Raw bracket of two single terms; emits (integer coefficient, tail, head)
/// triples before any ring arithmetic.
void term_bracket(GrassmannMonomial r, unsigned n, GrassmannMonomial rp,
                  unsigned m,
                  const std::function<void(int, GrassmannMonomial, unsigned)>&
                      emit);

}  // namespace plie
