#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plie/operators.hpp"

namespace plie {

// The oracle realizes elements as linear operators on the finite Grassmann
// algebra spanned by x_0..x_{M-1}.  That space is invariant: a pivot head
// only ever produces letters below the one it consumes.  Equality of
// operators on it decides equality of elements whose heads and letters stay
// below the horizon, which gives a route to every identity that is
// independent of the normal-form bracket.
//
// Coefficient arithmetic is a template parameter so the same code runs on
// exact scalars and, for the big sweeps, on machine words.

struct I64Domain {
  using C = long long;
  static C zero() { return 0; }
  static bool is_zero(C c) { return c == 0; }
  static C add(C a, C b) { return a + b; }
  static C mul(C a, C b) { return a * b; }
  static C times(C a, int k) { return a * k; }
  static C neg(C a) { return -a; }
  C from_scalar(const Scalar& s) const {
    if (s.den() != 1) throw std::domain_error("oracle: non-integer scalar");
    return s.num().convert_to<long long>();
  }
};

struct ModDomain {
  std::uint64_t p;
  using C = std::uint64_t;
  C zero() const { return 0; }
  bool is_zero(C c) const { return c == 0; }
  C add(C a, C b) const {
    C s = a + b;
    return s >= p ? s - p : s;
  }
  C mul(C a, C b) const {
    return static_cast<C>((static_cast<unsigned __int128>(a) * b) % p);
  }
  C times(C a, int k) const {
    long long r = k % static_cast<long long>(p);
    if (r < 0) r += p;
    return mul(a, static_cast<C>(r));
  }
  C neg(C a) const { return a == 0 ? 0 : p - a; }
  C inv(C a) const {
    long long t = 0, nt = 1, r = static_cast<long long>(p),
              nr = static_cast<long long>(a % p);
    while (nr != 0) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("oracle: not invertible mod p");
    if (t < 0) t += p;
    return static_cast<C>(t);
  }
  C from_scalar(const Scalar& s) const {
    C num = static_cast<C>((s.num() % p + p).convert_to<std::uint64_t>() % p);
    if (s.den() == 1) return num;
    C den = static_cast<C>((s.den() % p).convert_to<std::uint64_t>());
    return mul(num, inv(den));
  }
};

struct ScalarDomain {
  Ring ring;
  using C = Scalar;
  C zero() const { return Scalar::zero(ring); }
  static bool is_zero(const C& c) { return c.is_zero(); }
  static C add(const C& a, const C& b) { return a + b; }
  static C mul(const C& a, const C& b) { return a * b; }
  static C times(const C& a, int k) { return a.times(k); }
  static C neg(const C& a) { return -a; }
  static const C& from_scalar(const Scalar& s) { return s; }
};

/// Sparse vector in the monomial basis of the truncated Grassmann algebra,
/// sorted by monomial bits, zero coefficients dropped.
template <class D>
using LambdaVec = std::vector<std::pair<std::uint64_t, typename D::C>>;

/// v_n applied to the basis monomial `bits`: emit(sign, out_bits) per term.
template <class F>
inline void for_each_pivot_image(unsigned n, std::uint64_t bits, F&& emit) {
  for (std::uint64_t rest = bits >> n << n; rest; rest &= rest - 1) {
    const unsigned j = std::countr_zero(rest);
    if ((j - n) & 1) continue;
    const std::uint64_t block =
        GrassmannMonomial::range(n, j).bits();
    const std::uint64_t others = bits & ~(std::uint64_t{1} << j);
    if (block & others) continue;
    int swaps = std::popcount(bits & ((std::uint64_t{1} << j) - 1));
    // interleave the run x_n..x_{j-1} with the remaining letters
    for (std::uint64_t b2 = others; b2; b2 &= b2 - 1) {
      swaps += std::popcount(block >> (std::countr_zero(b2) + 1));
    }
    emit((swaps & 1) ? -1 : +1, block | others);
  }
}

/// tail * v_head applied to one basis monomial.
template <class F>
inline void for_each_term_image(GrassmannMonomial tail, unsigned head,
                                std::uint64_t bits, F&& emit) {
  for_each_pivot_image(head, bits, [&](int sign, std::uint64_t out) {
    if (tail.bits() & out) return;
    int swaps = 0;
    for (std::uint64_t b2 = out; b2; b2 &= b2 - 1) {
      swaps += std::popcount(tail.bits() >> (std::countr_zero(b2) + 1));
    }
    emit((swaps & 1) ? -sign : sign, tail.bits() | out);
  });
}

template <class D>
void vec_add(const D& dom, LambdaVec<D>& v, std::uint64_t bits,
             typename D::C c) {
  if (dom.is_zero(c)) return;
  auto it = std::lower_bound(
      v.begin(), v.end(), bits,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  if (it != v.end() && it->first == bits) {
    it->second = dom.add(it->second, c);
    if (dom.is_zero(it->second)) v.erase(it);
  } else {
    v.insert(it, {bits, std::move(c)});
  }
}

/// Lowered form of an element: coefficient/key pairs in the given domain.
template <class D>
struct LoweredElement {
  std::vector<std::pair<typename D::C, PivotKey>> terms;
  int parity = 0;  // Z2-degree when homogeneous; callers split beforehand
};

template <class D>
LoweredElement<D> lower(const D& dom, const Element& e) {
  LoweredElement<D> out;
  for (const auto& [k, c] : e.terms()) {
    out.terms.emplace_back(dom.from_scalar(c), k);
  }
  auto deg = e.z2_degree();
  out.parity = deg ? *deg : -1;
  return out;
}

template <class D>
void apply_lowered(const D& dom, const LoweredElement<D>& e, std::uint64_t bits,
                   LambdaVec<D>& acc) {
  for (const auto& [c, key] : e.terms) {
    for_each_term_image(key.tail, key.head, bits,
                        [&](int sign, std::uint64_t out) {
                          vec_add(dom, acc, out, dom.times(c, sign));
                        });
  }
}

template <class D>
void apply_lowered_vec(const D& dom, const LoweredElement<D>& e,
                       const LambdaVec<D>& in, LambdaVec<D>& acc) {
  for (const auto& [bits, c] : in) {
    for (const auto& [tc, key] : e.terms) {
      for_each_term_image(key.tail, key.head, bits,
                          [&](int sign, std::uint64_t out) {
                            vec_add(dom, acc, out, dom.times(dom.mul(c, tc), sign));
                          });
    }
  }
}

/// Full column table of an element on the 2^M-dimensional truncation.
template <class D>
struct ActionTable {
  unsigned horizon = 0;
  std::vector<LambdaVec<D>> cols;  // cols[bits] = image of that monomial
};

template <class D>
ActionTable<D> oracle_action(const D& dom, const Element& e, unsigned M) {
  if (M >= 26) throw std::invalid_argument("oracle_action: horizon too large");
  if (e.max_head() >= static_cast<int>(M) ||
      e.max_letter() >= static_cast<int>(M)) {
    throw std::invalid_argument("oracle_action: head beyond horizon");
  }
  ActionTable<D> t;
  t.horizon = M;
  t.cols.resize(std::size_t{1} << M);
  auto low = lower(dom, e);
  for (std::uint64_t bits = 0; bits < t.cols.size(); ++bits) {
    apply_lowered(dom, low, bits, t.cols[bits]);
  }
  return t;
}

/// Engine-vs-oracle check for one bracket: the normal-form bracket must act
/// as the operator supercommutator on every basis monomial of the
/// truncation.  Decides equality entirely on the oracle side.
bool oracle_bracket_check(const Element& u, const Element& w, unsigned M);

}  // namespace plie
