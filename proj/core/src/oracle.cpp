#include "plie/oracle.hpp"

namespace plie {

namespace {

std::pair<Element, Element> split_parity(const Element& e) {
  Element even(e.ring()), odd(e.ring());
  for (const auto& [k, c] : e.terms()) {
    (k.z2_degree() == 0 ? even : odd).add(k, c);
  }
  return {even, odd};
}

}  // namespace

bool oracle_bracket_check(const Element& u, const Element& w, unsigned M) {
  if (!(u.ring() == w.ring())) {
    throw std::invalid_argument("oracle_bracket_check: ring mismatch");
  }
  const Element e = bracket(u, w);
  const int budget = static_cast<int>(M) - 2;
  for (const Element* x : {&u, &w, &e}) {
    if (x->max_head() >= budget || x->max_letter() >= static_cast<int>(M)) {
      throw std::invalid_argument("oracle_bracket_check: horizon too small");
    }
  }

  const ScalarDomain dom{u.ring()};
  auto [u0, u1] = split_parity(u);
  auto [w0, w1] = split_parity(w);
  struct Part {
    LoweredElement<ScalarDomain> low;
    int parity;
  };
  std::vector<Part> us, ws;
  for (auto* p : {&u0, &u1}) {
    if (!p->is_zero()) us.push_back({lower(dom, *p), *p->z2_degree()});
  }
  for (auto* p : {&w0, &w1}) {
    if (!p->is_zero()) ws.push_back({lower(dom, *p), *p->z2_degree()});
  }
  const auto low_e = lower(dom, e);

  LambdaVec<ScalarDomain> acc, tmp, comp;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << M); ++bits) {
    acc.clear();
    for (const auto& pu : us) {
      for (const auto& pw : ws) {
        const int swap_sign = (pu.parity && pw.parity) ? +1 : -1;
        tmp.clear();
        comp.clear();
        apply_lowered(dom, pw.low, bits, tmp);
        apply_lowered_vec(dom, pu.low, tmp, comp);
        for (const auto& [b, c] : comp) vec_add(dom, acc, b, c);
        tmp.clear();
        comp.clear();
        apply_lowered(dom, pu.low, bits, tmp);
        apply_lowered_vec(dom, pw.low, tmp, comp);
        for (const auto& [b, c] : comp) vec_add(dom, acc, b, dom.times(c, swap_sign));
      }
    }
    tmp.clear();
    apply_lowered(dom, low_e, bits, tmp);
    for (const auto& [b, c] : tmp) vec_add(dom, acc, b, dom.neg(c));
    if (!acc.empty()) return false;
  }
  return true;
}

}  // namespace plie
