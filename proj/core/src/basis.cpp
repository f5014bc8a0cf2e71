#include "plie/basis.hpp"

#include <algorithm>
#include <bit>

namespace plie {

namespace {

// bits strictly below k; empty mask for k <= 0
std::uint64_t mask_below(int k) {
  if (k <= 0) return 0;
  if (k >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << k) - 1;
}

unsigned ceil_log2(long long m) {  // smallest n with 2^n >= m, m >= 1
  unsigned n = 0;
  while ((1ll << n) < m) ++n;
  return n;
}

}  // namespace

std::optional<BasisKind> classify(GrassmannMonomial tail, unsigned head) {
  const unsigned n = head;
  if ((tail.bits() & ~mask_below(static_cast<int>(n) - 1)) == 0) {
    return BasisKind::First;
  }
  if (n >= 2 && tail.contains(n - 1) &&
      (tail.without(n - 1).bits() & ~mask_below(static_cast<int>(n) - 2)) == 0 &&
      !is_excluded_monomial(tail, head)) {
    return BasisKind::Second;
  }
  return std::nullopt;
}

std::vector<StandardMonomial> enumerate_by_length(unsigned n, const Ring& ring,
                                                  Variant v) {
  const BasisFamilies fam = basis_families(ring, v);
  std::vector<StandardMonomial> out;

  const std::uint64_t first_tails = mask_below(static_cast<int>(n) - 1);
  for (std::uint64_t t = 0;; t = (t - first_tails) & first_tails) {
    out.push_back({BasisKind::First, n, GrassmannMonomial::from_bits(t)});
    if (t == first_tails) break;
  }

  if (fam.second && n >= 2) {
    const std::uint64_t neck = std::uint64_t{1} << (n - 1);
    const std::uint64_t sub = mask_below(static_cast<int>(n) - 2);
    for (std::uint64_t t = 0;; t = (t - sub) & sub) {
      GrassmannMonomial tail = GrassmannMonomial::from_bits(t | neck);
      if (!is_excluded_monomial(tail, n)) {
        out.push_back({BasisKind::Second, n, tail});
      }
      if (t == sub) break;
    }
  }

  if (fam.squares && n >= 2) {
    out.push_back({BasisKind::PivotSquare, n, GrassmannMonomial::single(n - 1)});
  }

  std::sort(out.begin(), out.end(),
            [](const StandardMonomial& a, const StandardMonomial& b) {
              auto wa = weight_of(a).wt, wb = weight_of(b).wt;
              if (wa != wb) return wa < wb;
              return a.kind < b.kind;
            });
  return out;
}

std::optional<StandardMonomial> monomial_of_weight(long long m,
                                                   BasisKind kind) {
  if (m < 1) return std::nullopt;
  switch (kind) {
    case BasisKind::First: {
      const unsigned n = ceil_log2(m);
      const std::uint64_t bits = static_cast<std::uint64_t>(pow2ll(n) - m);
      return StandardMonomial{BasisKind::First, n,
                              GrassmannMonomial::from_bits(bits)};
    }
    case BasisKind::Second: {
      if (m < 2) return std::nullopt;
      const unsigned n = ceil_log2(m) + 1;
      const std::uint64_t rest = static_cast<std::uint64_t>(pow2ll(n - 1) - m);
      GrassmannMonomial tail =
          GrassmannMonomial::from_bits(rest | (std::uint64_t{1} << (n - 1)));
      if (is_excluded_monomial(tail, n)) return std::nullopt;
      return StandardMonomial{BasisKind::Second, n, tail};
    }
    case BasisKind::PivotSquare: {
      // squares live at the weights 2^{n-1}, n >= 2
      if (m < 2 || (m & (m - 1)) != 0) return std::nullopt;
      const unsigned n = ceil_log2(m) + 1;
      return StandardMonomial{BasisKind::PivotSquare, n,
                              GrassmannMonomial::single(n - 1)};
    }
  }
  return std::nullopt;
}

StandardMonomial partner(const StandardMonomial& w1) {
  if (w1.kind != BasisKind::First) {
    throw std::invalid_argument("partner: first-kind monomial required");
  }
  const long long m = weight_of(w1).wt;
  if (m == 1 || m == 3) {
    throw std::invalid_argument("partner: weight " + std::to_string(m) +
                                " has a single basis monomial");
  }
  const unsigned n = w1.length;
  GrassmannMonomial tail =
      GrassmannMonomial::from_bits(w1.tail.bits() | (std::uint64_t{1} << n));
  return {BasisKind::Second, n + 1, tail};
}

int z_form_coefficient(const StandardMonomial& m) {
  if (m.kind == BasisKind::First) return 1;
  const bool bare = m.length >= 2 &&
                    m.tail == GrassmannMonomial::single(m.length - 1);
  return bare ? 1 : 2;
}

StandardMonomial tau_shift(const StandardMonomial& m) {
  return {m.kind, m.length + 1,
          GrassmannMonomial::from_bits(m.tail.bits() << 1)};
}

}  // namespace plie
