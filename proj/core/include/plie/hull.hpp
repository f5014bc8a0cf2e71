#pragma once

#include <map>
#include <vector>

#include "plie/operators.hpp"

namespace plie {

/// Normal form of an associative-hull monomial: Grassmann letters on the
/// left, then a strictly decreasing run of pivot heads
///   tail * v_head * v_{i} ...  (suffix = bit set of the trailing heads).
struct HullKey {
  std::uint32_t head = 0;
  GrassmannMonomial tail;
  std::uint64_t suffix = 0;  // heads below `head`, each used at most once

  bool operator==(const HullKey&) const = default;
  auto operator<=>(const HullKey&) const = default;

  unsigned length() const { return head; }
  int head_count() const { return 1 + std::popcount(suffix); }
  int z2_degree() const { return (tail.size() + head_count()) & 1; }
};

WeightVector weight_of(const HullKey& k);
MultiDegree multidegree_of(const HullKey& k);

/// Basis-pattern membership per the hull basis description (tail window,
/// senior-index inequality, and the length-3 exception).
bool hull_basis_constraints(const HullKey& k);

class HullElement {
 public:
  explicit HullElement(const Ring& ring) : ring_(ring) {}
  static HullElement zero(const Ring& ring) { return HullElement(ring); }

  const Ring& ring() const { return ring_; }
  const std::map<HullKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const HullKey& k, const Scalar& c);
  HullElement operator+(const HullElement& o) const;
  HullElement operator-(const HullElement& o) const;
  HullElement scaled(const Scalar& c) const;
  bool operator==(const HullElement& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }
  std::optional<int> z2_degree() const;
  int max_head() const;
  int max_letter() const;

 private:
  Ring ring_;
  std::map<HullKey, Scalar> terms_;
};

/// Embed a Lie element (hull monomials with empty suffix).
HullElement hull_from(const Element& e);

/// Exact associative product, renormalized to hull normal form.
HullElement hull_product(const HullElement& u, const HullElement& w);

/// Supercommutator computed through the associative engine; a third route
/// to the Lie bracket, used for cross checks.
HullElement hull_supercommutator(const HullElement& u, const HullElement& w);

/// All hull basis monomials of length n, in key order.
std::vector<HullKey> enumerate_hull(unsigned n);

/// Histogram of hull basis monomials by total degree, indices 0..max_degree.
std::vector<long long> hull_degree_histogram(long long max_degree);

}  // namespace plie
