#include "plie/growth.hpp"

#include <algorithm>
#include <stdexcept>

#include "plie/hull.hpp"

namespace plie {

std::vector<unsigned> Hilbert2D::dims_by_degree() const {
  std::vector<unsigned> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [d, c] : coeff) {
    const long long n = d.degree();
    if (n >= 1 && n <= max_degree) dims[static_cast<std::size_t>(n)] += c;
  }
  return dims;
}

namespace {

void advance_level(std::vector<MultiDegree>& level, long long max_degree) {
  std::vector<MultiDegree> next;
  next.reserve(2 * level.size());
  for (const MultiDegree& p : level) {
    const MultiDegree q = tau_multidegree(p);
    if (q.degree() <= max_degree) next.push_back(q);
    const MultiDegree q0{q.x1 - 1, q.x2};
    if (q0.degree() <= max_degree) next.push_back(q0);
  }
  level = std::move(next);
}

}  // namespace

Hilbert2D hilbert_2d(long long max_degree, const Ring& ring, Variant v) {
  if (max_degree < 1) throw std::invalid_argument("hilbert_2d: degree >= 1");
  const BasisFamilies fam = basis_families(ring, v);

  Hilbert2D h;
  h.max_degree = max_degree;
  auto put = [&](MultiDegree d) {
    if (d.degree() > max_degree) return;
    auto [it, fresh] = h.coeff.try_emplace(d, 1u);
    if (!fresh) {
      throw std::logic_error("hilbert_2d: grading component not fine");
    }
  };

  // seed lengths 0..4 from direct enumeration, then iterate the shift
  // bijection T_{n+1} = {1, x0} tau(T_n) separately per kind
  std::vector<MultiDegree> first, second;
  const Ring seed_ring = Ring::rationals();
  for (unsigned n = 0; n <= 4; ++n) {
    for (const auto& m : enumerate_by_length(n, seed_ring, Variant::Super)) {
      const MultiDegree d = multidegree_of(m);
      if (m.kind == BasisKind::First) {
        if (n == 4) first.push_back(d);
        put(d);
      } else {
        if (n == 4) second.push_back(d);
        if (fam.second) put(d);
      }
    }
  }
  while (!first.empty() || !second.empty()) {
    advance_level(first, max_degree);
    advance_level(second, max_degree);
    for (const MultiDegree& d : first) put(d);
    if (fam.second) {
      for (const MultiDegree& d : second) put(d);
    }
  }

  if (fam.squares) {
    // pivot squares x_{n-1} v_n, n >= 2, one per length
    for (unsigned n = 2; n < 62; ++n) {
      const MultiDegree d =
          multidegree_of(GrassmannMonomial::single(n - 1), n);
      if (d.degree() > max_degree) break;
      put(d);
    }
  }
  return h;
}

long long weight_growth(long long m, const Ring& ring, Variant v) {
  if (m < 1) throw std::invalid_argument("weight_growth: m >= 1");
  return weight_growth_table(m, ring, v).back();
}

std::vector<long long> weight_growth_table(long long max_m, const Ring& ring,
                                           Variant v) {
  if (max_m < 1) throw std::invalid_argument("weight_growth_table: m >= 1");
  std::vector<long long> hist(static_cast<std::size_t>(max_m) + 1, 0);
  for (unsigned len = 0; len < 62; ++len) {
    if (len >= 2 && pow2ll(len - 2) >= max_m) break;  // weights exceed max_m
    for (const auto& mono : enumerate_by_length(len, ring, v)) {
      const long long w = weight_of(mono).wt;
      if (w <= max_m) ++hist[static_cast<std::size_t>(w)];
    }
  }
  for (std::size_t i = 1; i < hist.size(); ++i) hist[i] += hist[i - 1];
  return hist;
}

long long ordinary_growth(long long m, const Ring& ring, Variant v) {
  const auto dims = hilbert_2d(m, ring, v).dims_by_degree();
  long long total = 0;
  for (long long n = 1; n <= m; ++n) total += dims[static_cast<std::size_t>(n)];
  return total;
}

long long hull_ordinary_growth(long long m) {
  const auto hist = hull_degree_histogram(m);
  long long total = 0;
  for (long long v : hist) total += v;
  return total;
}

std::string apply_width_rule(std::string_view word) {
  std::string out = "b";
  for (char c : word) {
    switch (c) {
      case 'a':
        out += "bb";
        break;
      case 'b':
        out += "ab";
        break;
      default:
        throw std::invalid_argument("width word letters are 'a' and 'b'");
    }
  }
  return out;
}

std::string width_word(unsigned levels) {
  std::string w = "bab";
  for (unsigned i = 0; i < levels; ++i) w = apply_width_rule(w);
  return w;
}

std::string united_width_word(unsigned max_length) {
  if (max_length < 3) throw std::invalid_argument("united word starts at 3");
  std::string out = width_word(0);
  std::string piece = out;
  for (unsigned n = 4; n <= max_length; ++n) {
    out += (n % 2 == 0) ? 'b' : 'a';  // connecting segment
    piece = apply_width_rule(piece);
    out += piece;
  }
  return out;
}

std::vector<unsigned> dims_from_united_word(unsigned max_length) {
  const std::string word = united_width_word(max_length);

  // the walk starts at the minimum-weight monomial of length 3
  const GrassmannMonomial start_tail = GrassmannMonomial::range(0, 2);
  long long deg = multidegree_of(start_tail, 3).degree();

  // dims are complete below the first degree of the next length
  const GrassmannMonomial next_tail = GrassmannMonomial::range(0, max_length);
  const long long valid_to =
      multidegree_of(next_tail, max_length + 1).degree() - 1;

  std::vector<unsigned> dims(static_cast<std::size_t>(valid_to) + 1, 0);
  auto bump = [&](long long n) {
    if (n >= 1 && n <= valid_to) ++dims[static_cast<std::size_t>(n)];
  };
  bump(1);  // v0
  bump(1);  // v1
  bump(2);  // x0 v2
  bump(3);  // v2
  bump(deg);
  for (char c : word) {
    if (c == 'b') ++deg;
    bump(deg);
  }
  return dims;
}

std::vector<unsigned> diamond_sequence(long long N) {
  if (N < 1) throw std::invalid_argument("diamond_sequence: N >= 1");
  auto dims = hilbert_2d(N, Ring::prime_field(2), Variant::Lie).dims_by_degree();
  return {dims.begin() + 1, dims.end()};
}

std::vector<long long> surviving_periods(const std::vector<unsigned>& dims,
                                         long long limit) {
  std::vector<long long> periods;
  const long long n = static_cast<long long>(dims.size());
  for (long long p = 1; p <= limit; ++p) {
    if (2 * p > n) break;
    bool periodic = true;
    for (long long i = n - 2 * p; i < n - p; ++i) {
      if (dims[static_cast<std::size_t>(i)] !=
          dims[static_cast<std::size_t>(i + p)]) {
        periodic = false;
        break;
      }
    }
    if (periodic) periods.push_back(p);
  }
  return periods;
}

std::vector<long long> empty_diagonals(long long n_max) {
  if (n_max < 1) throw std::invalid_argument("empty_diagonals: n_max >= 1");
  const Hilbert2D h = hilbert_2d(2 * n_max, Ring::rationals(), Variant::Super);
  std::vector<long long> out;
  for (long long n = 1; n <= n_max; ++n) {
    if (h.at(n, n) == 0) out.push_back(n);
  }
  return out;
}

}  // namespace plie
