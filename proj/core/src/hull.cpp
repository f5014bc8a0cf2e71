#include "plie/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace plie {

WeightVector weight_of(const HullKey& k) {
  WeightVector w = weight_of(k.tail, k.head);
  for (std::uint64_t rest = k.suffix; rest; rest &= rest - 1) {
    w = w + pivot_weight(std::countr_zero(rest));
  }
  return w;
}

MultiDegree multidegree_of(const HullKey& k) {
  auto d = multidegree_from_weight(weight_of(k));
  if (!d) throw std::logic_error("hull weight has no integral multidegree");
  return *d;
}

bool hull_basis_constraints(const HullKey& k) {
  const unsigned n = k.head;
  const std::uint64_t below =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((k.suffix & ~below) != 0) return false;
  if (n == 0) return k.tail.empty() && k.suffix == 0;
  if (n == 1) return k.tail.empty();
  if ((k.tail.bits() & ~below) != 0) return false;
  if (n == 2) return k.tail.size() <= 1;
  const int xi = k.tail.contains(n - 2) + k.tail.contains(n - 1);
  const int alpha = (k.suffix >> (n - 1)) & 1;
  if (xi > 1 + alpha) return false;
  if (n == 3 && k.tail.contains(0) && k.tail.contains(2)) {
    return k.tail == GrassmannMonomial::from_bits(0b101) &&
           ((k.suffix >> 2) & 1);
  }
  return true;
}

void HullElement::add(const HullKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HullElement HullElement::operator+(const HullElement& o) const {
  HullElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

HullElement HullElement::operator-(const HullElement& o) const {
  HullElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

HullElement HullElement::scaled(const Scalar& c) const {
  HullElement r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [k, s] : terms_) {
    Scalar p = s * c;
    if (!p.is_zero()) r.terms_.emplace(k, std::move(p));
  }
  return r;
}

std::optional<int> HullElement::z2_degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.z2_degree();
  for (const auto& [k, c] : terms_) {
    if (k.z2_degree() != d) return std::nullopt;
  }
  return d;
}

int HullElement::max_head() const {
  int h = -1;
  for (const auto& [k, c] : terms_) h = std::max(h, static_cast<int>(k.head));
  return h;
}

int HullElement::max_letter() const {
  int top = -1;
  for (const auto& [k, c] : terms_) {
    if (!k.tail.empty()) top = std::max(top, static_cast<int>(k.tail.top()));
  }
  return top;
}

HullElement hull_from(const Element& e) {
  HullElement out(e.ring());
  for (const auto& [k, c] : e.terms()) {
    out.add(HullKey{k.head, k.tail, 0}, c);
  }
  return out;
}

namespace {

struct Sym {
  bool is_head;
  unsigned idx;
};
using Word = std::vector<Sym>;

Word word_of(const HullKey& k) {
  Word w;
  for (std::uint64_t rest = k.tail.bits(); rest; rest &= rest - 1) {
    w.push_back({false, static_cast<unsigned>(std::countr_zero(rest))});
  }
  w.push_back({true, k.head});
  std::uint64_t rest = k.suffix;
  while (rest) {
    const unsigned top = 63 - std::countl_zero(rest);
    w.push_back({true, top});
    rest &= ~(std::uint64_t{1} << top);
  }
  return w;
}

// Replace word[i..i+1] by the given symbols.
Word splice(const Word& w, std::size_t i, const Word& repl) {
  Word out;
  out.reserve(w.size() + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + i);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + i + 2, w.end());
  return out;
}

Word letters_of(GrassmannMonomial m, std::optional<unsigned> extra_head) {
  Word out;
  for (std::uint64_t rest = m.bits(); rest; rest &= rest - 1) {
    out.push_back({false, static_cast<unsigned>(std::countr_zero(rest))});
  }
  if (extra_head) out.push_back({true, *extra_head});
  return out;
}

// Rewrites an operator word to hull normal form.  Letters migrate left with
// a sign, v_k past x_j leaves the substitution v_k(x_j), ascending head
// pairs swap against the closed pivot products, equal heads collapse via
// v_n v_n = x_{n+1} v_{n+2}.  Every correction drops one head, so the
// recursion terminates.
void normalize_into(const Ring& ring, std::map<HullKey, Scalar>& out,
                    Scalar coeff, Word word) {
  std::vector<std::pair<Scalar, Word>> work;
  work.emplace_back(std::move(coeff), std::move(word));

  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();

    bool dead = false;
    std::size_t i = 0;
    while (i + 1 < w.size()) {
      const Sym a = w[i], b = w[i + 1];
      if (!a.is_head && !b.is_head) {
        if (a.idx == b.idx) {
          dead = true;
          break;
        }
        if (a.idx > b.idx) {
          std::swap(w[i], w[i + 1]);
          c = -c;
          i = i ? i - 1 : 0;
        } else {
          ++i;
        }
      } else if (!a.is_head && b.is_head) {
        ++i;
      } else if (a.is_head && !b.is_head) {
        const unsigned k = a.idx, j = b.idx;
        if (j >= k && (j - k) % 2 == 0) {
          work.emplace_back(
              c, splice(w, i, letters_of(GrassmannMonomial::range(k, j),
                                         std::nullopt)));
        }
        std::swap(w[i], w[i + 1]);
        c = -c;
        i = i ? i - 1 : 0;
      } else {
        const unsigned n = a.idx, m = b.idx;
        if (n > m) {
          ++i;
        } else if (n == m) {
          w = splice(w, i, {{false, n + 1}, {true, n + 2}});
          i = i ? i - 1 : 0;
        } else {
          const PivotBracket pb = pivot_pair_bracket(n, m);
          const Scalar cc = c.times(pb.coeff);
          if (!cc.is_zero()) {
            work.emplace_back(cc, splice(w, i, letters_of(pb.letters, pb.head)));
          }
          std::swap(w[i], w[i + 1]);
          c = -c;
          i = i ? i - 1 : 0;
        }
      }
    }
    if (dead || c.is_zero()) continue;

    HullKey key;
    std::uint64_t tail = 0;
    std::size_t p = 0;
    while (p < w.size() && !w[p].is_head) {
      tail |= std::uint64_t{1} << w[p].idx;
      ++p;
    }
    if (p == w.size()) {
      throw std::logic_error("hull normal form lost every head");
    }
    key.head = w[p].idx;
    key.tail = GrassmannMonomial::from_bits(tail);
    ++p;
    for (; p < w.size(); ++p) key.suffix |= std::uint64_t{1} << w[p].idx;

    auto [it, fresh] = out.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  (void)ring;
}

}  // namespace

HullElement hull_product(const HullElement& u, const HullElement& w) {
  if (!(u.ring() == w.ring())) {
    throw std::invalid_argument("hull_product: ring mismatch");
  }
  std::map<HullKey, Scalar> acc;
  for (const auto& [ku, cu] : u.terms()) {
    const Word wu = word_of(ku);
    for (const auto& [kw, cw] : w.terms()) {
      Word prod = wu;
      const Word tailw = word_of(kw);
      prod.insert(prod.end(), tailw.begin(), tailw.end());
      normalize_into(u.ring(), acc, cu * cw, std::move(prod));
    }
  }
  HullElement out(u.ring());
  for (auto& [k, c] : acc) out.add(k, c);
  return out;
}

HullElement hull_supercommutator(const HullElement& u, const HullElement& w) {
  HullElement out(u.ring());
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kw, cw] : w.terms()) {
      HullElement a(u.ring()), b(w.ring());
      a.add(ku, cu);
      b.add(kw, cw);
      const int sign =
          (ku.z2_degree() == 1 && kw.z2_degree() == 1) ? +1 : -1;
      out = out + hull_product(a, b) +
            hull_product(b, a).scaled(Scalar::of(u.ring(), sign));
    }
  }
  return out;
}

std::vector<HullKey> enumerate_hull(unsigned n) {
  std::vector<HullKey> out;
  auto push = [&](std::uint64_t tail, std::uint64_t suffix) {
    out.push_back(HullKey{n, GrassmannMonomial::from_bits(tail), suffix});
  };
  if (n == 0) {
    push(0, 0);
    return out;
  }
  if (n == 1) {
    push(0, 0);
    push(0, 1);
    return out;
  }
  if (n == 2) {
    for (std::uint64_t tail : {0ull, 1ull, 2ull}) {
      for (std::uint64_t suffix = 0; suffix < 4; ++suffix) push(tail, suffix);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const std::uint64_t sub_mask = (std::uint64_t{1} << (n - 2)) - 1;
  const std::uint64_t suf_mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t sub = 0;; sub = (sub - sub_mask) & sub_mask) {
    for (int xi2 = 0; xi2 < 2; ++xi2) {
      for (int xi1 = 0; xi1 < 2; ++xi1) {
        const std::uint64_t tail = sub |
                                   (std::uint64_t{xi2 ? 1u : 0u} << (n - 2)) |
                                   (std::uint64_t{xi1 ? 1u : 0u} << (n - 1));
        for (std::uint64_t suffix = 0;; suffix = (suffix - suf_mask) & suf_mask) {
          const int alpha = (suffix >> (n - 1)) & 1;
          bool ok = xi1 + xi2 <= 1 + alpha;
          if (ok && n == 3 && (tail & 0b101) == 0b101) {
            ok = tail == 0b101 && ((suffix >> 2) & 1);
          }
          if (ok) push(tail, suffix);
          if (suffix == suf_mask) break;
        }
      }
    }
    if (sub == sub_mask) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> hull_degree_histogram(long long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hull histogram: degree >= 0");
  std::vector<long long> hist(static_cast<std::size_t>(max_degree) + 1, 0);
  for (unsigned n = 0; n < 62; ++n) {
    if (n >= 4 && pow2ll(n - 1) + 1 - static_cast<long long>(n) >
                      3 * max_degree) {
      break;
    }
    for (const HullKey& k : enumerate_hull(n)) {
      const long long d = multidegree_of(k).degree();
      if (d >= 0 && d <= max_degree) ++hist[static_cast<std::size_t>(d)];
    }
  }
  return hist;
}

}  // namespace plie
