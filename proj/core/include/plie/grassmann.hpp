#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace plie {

/// Upper bound on generator indices in one session.  Every desk-scale run in
/// this project stays far below it; the lattice computations that go further
/// never touch Grassmann monomials.
inline constexpr unsigned kMaxIndex = 64;

/// Square-free monomial x_{i1}...x_{it} in anticommuting generators, stored
/// as a bit set of indices.  The empty set is the unit 1.
class GrassmannMonomial {
 public:
  constexpr GrassmannMonomial() = default;

  static constexpr GrassmannMonomial unit() { return {}; }
  static constexpr GrassmannMonomial from_bits(std::uint64_t bits) {
    GrassmannMonomial m;
    m.bits_ = bits;
    return m;
  }
  static GrassmannMonomial single(unsigned i) {
    return from_bits(std::uint64_t{1} << i);
  }
  /// x_lo x_{lo+1} ... x_{hi-1}; the unit when hi <= lo.
  static GrassmannMonomial range(unsigned lo, unsigned hi) {
    if (hi <= lo) return unit();
    std::uint64_t high = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    return from_bits(high & ~((std::uint64_t{1} << lo) - 1));
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int parity() const { return size() & 1; }
  bool contains(unsigned i) const { return (bits_ >> i) & 1; }
  unsigned top() const { return 63 - std::countl_zero(bits_); }  // requires nonempty

  GrassmannMonomial without(unsigned i) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << i));
  }
  int count_below(unsigned i) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << i) - 1));
  }

  bool operator==(const GrassmannMonomial&) const = default;
  auto operator<=>(const GrassmannMonomial&) const = default;

  std::string str() const;  // "x0x2x5"; "1" for the unit
  static std::optional<GrassmannMonomial> parse(std::string_view text);

 private:
  std::uint64_t bits_ = 0;
};

struct SignedMonomial {
  int sign;  // +1 or -1
  GrassmannMonomial mono;
};

/// Product a*b; nullopt (zero) iff the index sets intersect, otherwise the
/// union with the interleave sign.
inline std::optional<SignedMonomial> multiply(GrassmannMonomial a,
                                              GrassmannMonomial b) {
  if (a.bits() & b.bits()) return std::nullopt;
  // sign = (-1)^{number of pairs (i in a, j in b) with i > j}
  int swaps = 0;
  for (std::uint64_t rest = b.bits(); rest; rest &= rest - 1) {
    unsigned j = std::countr_zero(rest);
    swaps += std::popcount(a.bits() >> (j + 1));
  }
  return SignedMonomial{(swaps & 1) ? -1 : +1,
                        GrassmannMonomial::from_bits(a.bits() | b.bits())};
}

/// Superderivative d_i applied to a monomial; nullopt (zero) iff i is absent.
inline std::optional<SignedMonomial> apply_partial(unsigned i,
                                                   GrassmannMonomial m) {
  if (!m.contains(i)) return std::nullopt;
  return SignedMonomial{(m.count_below(i) & 1) ? -1 : +1, m.without(i)};
}

}  // namespace plie
