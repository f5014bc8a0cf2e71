#include "plie/gradings.hpp"

#include "plie/basis.hpp"

namespace plie {

WeightVector letters_weight(GrassmannMonomial letters) {
  WeightVector w{};
  for (std::uint64_t rest = letters.bits(); rest; rest &= rest - 1) {
    unsigned i = std::countr_zero(rest);
    w = w + letter_weight(i);
  }
  return w;
}

WeightVector weight_of(GrassmannMonomial tail, unsigned head) {
  return letters_weight(tail) + pivot_weight(head);
}

std::optional<MultiDegree> multidegree_from_weight(WeightVector w) {
  long long a = w.wt + 2 * w.swt;
  long long b = w.wt - w.swt;
  if (((a % 3) + 3) % 3 != 0) return std::nullopt;
  return MultiDegree{a / 3, b / 3};
}

MultiDegree multidegree_of(GrassmannMonomial tail, unsigned head) {
  auto d = multidegree_from_weight(weight_of(tail, head));
  if (!d) throw std::logic_error("monomial weight has no integral multidegree");
  return *d;
}

long long degree_from_weight(WeightVector w) {
  long long a = 2 * w.wt + w.swt;
  if (((a % 3) + 3) % 3 != 0) {
    throw std::logic_error("weight vector has no integral degree");
  }
  return a / 3;
}

namespace {

// log2(z1) > e, exactly, for integer e (possibly negative) and z1 >= 1.
bool log2_exceeds(long long z1, long long e) {
  if (z1 < 1) throw std::domain_error("corridor check needs positive weight");
  if (e < 0) return true;
  if (e >= 62) return false;
  return z1 > (1ll << e);
}

}  // namespace

bool inside_lie_corridor(WeightVector w) {
  // Z2 < log2(Z1)/2 + 2  <=>  log2(Z1) > 2*Z2 - 4
  // Z2 > -log2(Z1)/2 - 5/2  <=>  log2(Z1) > -(2*Z2 + 5)
  return log2_exceeds(w.wt, 2 * w.swt - 4) && log2_exceeds(w.wt, -(2 * w.swt + 5));
}

bool inside_hull_corridor(WeightVector w) {
  long long a = w.swt < 0 ? -w.swt : w.swt;
  return log2_exceeds(w.wt, a - 3);
}

long long degree_dimension(long long n, const Ring& ring, Variant v) {
  if (n < 1) throw std::invalid_argument("degree_dimension: n >= 1 required");
  long long count = 0;
  for (unsigned len = 0; len < 62; ++len) {
    // lengths whose minimum possible degree exceeds n cannot contribute
    if (len >= 3 && pow2ll(len - 1) > 3 * n + static_cast<long long>(len) + 4) break;
    for (const auto& m : enumerate_by_length(len, ring, v)) {
      if (degree_from_weight(weight_of(m)) == n) ++count;
    }
  }
  return count;
}

}  // namespace plie
