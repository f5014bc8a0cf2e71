#include "plie/operators.hpp"

#include <algorithm>

namespace plie {

Element Element::pivot(const Ring& ring, unsigned n) {
  return monomial(ring, GrassmannMonomial::unit(), n);
}

Element Element::monomial(const Ring& ring, GrassmannMonomial tail,
                          unsigned head) {
  return monomial(ring, tail, head, Scalar::one(ring));
}

Element Element::monomial(const Ring& ring, GrassmannMonomial tail,
                          unsigned head, Scalar coeff) {
  Element e(ring);
  e.add({head, tail}, coeff);
  return e;
}

void Element::add(const PivotKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
  Element r(ring_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [k, s] : terms_) {
    Scalar p = s * c;
    if (!p.is_zero()) r.terms_.emplace(k, std::move(p));
  }
  return r;
}

std::optional<int> Element::z2_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.z2_degree();
  for (const auto& [k, c] : terms_) {
    if (k.z2_degree() != d) return std::nullopt;
  }
  return d;
}

int Element::max_head() const {
  int h = -1;
  for (const auto& [k, c] : terms_) h = std::max(h, static_cast<int>(k.head));
  return h;
}

int Element::max_letter() const {
  int top = -1;
  for (const auto& [k, c] : terms_) {
    if (!k.tail.empty()) top = std::max(top, static_cast<int>(k.tail.top()));
  }
  return top;
}

PivotExpansion pivot_expand(unsigned n, unsigned m) {
  if (m <= n) {
    throw std::invalid_argument("pivot_expand: limit must exceed the head");
  }
  const unsigned stop = ((m - n) % 2 == 0) ? m : m - 1;
  PivotExpansion out;
  for (unsigned k = n; k < stop; k += 2) {
    out.partials.emplace_back(GrassmannMonomial::range(n, k), k);
  }
  out.trailing_tail = GrassmannMonomial::range(n, stop);
  out.trailing_head = stop;
  return out;
}

PivotBracket pivot_pair_bracket(unsigned n, unsigned m) {
  const unsigned a = std::min(n, m), b = std::max(n, m);
  GrassmannMonomial run = GrassmannMonomial::range(a, b);
  if ((b - a) % 2 == 0) {
    return {2, GrassmannMonomial::from_bits(run.bits() | (std::uint64_t{1} << (b + 1))),
            b + 2};
  }
  return {-1, run, b + 1};
}

// v_n applied to the single letter x_j: the unit for j == n, the run
// x_n..x_{j-1} for j > n of matching parity, zero otherwise.
static std::optional<GrassmannMonomial> pivot_on_letter(unsigned n, unsigned j) {
  if (j < n || ((j - n) & 1)) return std::nullopt;
  return GrassmannMonomial::range(n, j);
}

void term_bracket(GrassmannMonomial r, unsigned n, GrassmannMonomial rp,
                  unsigned m,
                  const std::function<void(int, GrassmannMonomial, unsigned)>&
                      emit) {
  // Supercommutator of r*v_n and rp*v_m.  Pushing v_n through rp by the
  // Leibniz rule and likewise v_m through r leaves the derivative terms
  // below, plus the anticommutator of the bare heads on the joint tail.
  const int super_sign =
      (((r.size() + 1) & 1) && ((rp.size() + 1) & 1)) ? -1 : +1;

  auto derivative_part = [&emit](GrassmannMonomial own, unsigned head_own,
                                 GrassmannMonomial other, unsigned head_other,
                                 int outer) {
    // own * v_own acting through the letters of `other`
    for (std::uint64_t rest = other.bits(); rest; rest &= rest - 1) {
      const unsigned j = std::countr_zero(rest);
      auto block = pivot_on_letter(head_own, j);
      if (!block) continue;
      const int leib = (other.count_below(j) & 1) ? -1 : +1;
      auto s1 = multiply(*block, other.without(j));
      if (!s1) continue;
      auto s2 = multiply(own, s1->mono);
      if (!s2) continue;
      emit(outer * leib * s1->sign * s2->sign, s2->mono, head_other);
    }
  };

  derivative_part(r, n, rp, m, +1);
  derivative_part(rp, m, r, n, -super_sign);

  if (auto joint = multiply(r, rp)) {
    const PivotBracket pb = pivot_pair_bracket(n, m);
    if (auto full = multiply(joint->mono, pb.letters)) {
      const int sign0 = (rp.size() & 1) ? -1 : +1;
      emit(sign0 * joint->sign * full->sign * pb.coeff, full->mono, pb.head);
    }
  }
}

Element bracket(const Element& u, const Element& w) {
  if (!(u.ring() == w.ring())) {
    throw std::invalid_argument("bracket: ring mismatch");
  }
  Element out(u.ring());
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kw, cw] : w.terms()) {
      const Scalar c = cu * cw;
      term_bracket(ku.tail, ku.head, kw.tail, kw.head,
                   [&](int sgn, GrassmannMonomial tail, unsigned head) {
                     out.add({head, tail}, c.times(sgn));
                   });
    }
  }
  return out;
}

Element square(const Element& u) {
  auto deg = u.z2_degree();
  if (!deg) throw std::invalid_argument("square: non-homogeneous element");
  if (u.is_zero()) return u;
  if (*deg != 1) throw std::invalid_argument("square: even element");

  if (u.ring().characteristic() != 2) {
    Element twice = bracket(u, u);
    Element out(u.ring());
    for (const auto& [k, c] : twice.terms()) out.add(k, c.halved());
    return out;
  }

  // formal square: cross terms via the bracket, term squares directly;
  // (r v_n)^2 vanishes whenever r is nonempty, v_n^2 = x_{n+1} v_{n+2}
  Element out(u.ring());
  const auto& terms = u.terms();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->first.tail.empty()) {
      const unsigned n = it->first.head;
      out.add({n + 2, GrassmannMonomial::single(n + 1)},
              it->second * it->second);
    }
    for (auto jt = std::next(it); jt != terms.end(); ++jt) {
      const Scalar c = it->second * jt->second;
      term_bracket(it->first.tail, it->first.head, jt->first.tail,
                   jt->first.head,
                   [&](int sgn, GrassmannMonomial tail, unsigned head) {
                     out.add({head, tail}, c.times(sgn));
                   });
    }
  }
  return out;
}

}  // namespace plie
