#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plie/basis.hpp"
#include "plie/session.hpp"

namespace plie {

/// Exact two-variable Hilbert data of the multidegree grading, complete for
/// all total degrees <= max_degree.  Every coefficient is 0 or 1 (the
/// grading is fine); computed on exponent lattices by iterating the
/// substitution (n1,n2) -> (2*n2, n1+n2) together with the optional
/// degree-lowering shift by (-1,0), never through symbolic series.
struct Hilbert2D {
  long long max_degree = 0;
  std::map<MultiDegree, unsigned> coeff;

  unsigned at(long long x1, long long x2) const {
    auto it = coeff.find(MultiDegree{x1, x2});
    return it == coeff.end() ? 0u : it->second;
  }
  /// dims[n] = dim R_n for 1 <= n <= max_degree (index 0 unused).
  std::vector<unsigned> dims_by_degree() const;
};

Hilbert2D hilbert_2d(long long max_degree, const Ring& ring, Variant v);

/// Count of basis monomials of weight <= m.
long long weight_growth(long long m, const Ring& ring, Variant v);

/// weight-growth values for every 1 <= m <= max_m (index 0 unused).
std::vector<long long> weight_growth_table(long long max_m, const Ring& ring,
                                           Variant v);

/// Ordinary growth of the Lie superalgebra: basis monomials of degree <= m.
long long ordinary_growth(long long m, const Ring& ring, Variant v);

/// Ordinary growth of the associative hull (characteristic-zero basis).
long long hull_ordinary_growth(long long m);

/// One application of the broken-line replacement rule a -> bb, b -> ab,
/// with the prefix letter b attached.
std::string apply_width_rule(std::string_view word);

/// The broken-line word of the first-kind monomials of length 3+levels.
std::string width_word(unsigned levels);

/// The concatenated broken line over all lengths 3..max_length, with the
/// connecting segments between consecutive lengths.
std::string united_width_word(unsigned max_length);

/// Degree dimensions read off the united broken line (plus the four
/// monomials of length < 3).  Returns dims[1..valid_to]; entries past
/// valid_to would need longer words and are not emitted.
std::vector<unsigned> dims_from_united_word(unsigned max_length);

/// Dimension sequence (dim R_n)_{1<=n<=N} of the characteristic-2 Lie
/// algebra; the paper-facing diamond pattern.
std::vector<unsigned> diamond_sequence(long long N);

/// Periods p <= limit for which the tail of the sequence looks p-periodic
/// (checked on the final window of length 2p).  Empty result = no eventual
/// period at this scale.
std::vector<long long> surviving_periods(const std::vector<unsigned>& dims,
                                         long long limit);

/// Indices n <= n_max with dim R_{n,n} = 0 in the multidegree grading.
std::vector<long long> empty_diagonals(long long n_max);

}  // namespace plie
