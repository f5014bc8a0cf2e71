#include "plie/grassmann.hpp"

#include <cctype>

namespace plie {

std::string GrassmannMonomial::str() const {
  if (bits_ == 0) return "1";
  std::string s;
  for (std::uint64_t rest = bits_; rest; rest &= rest - 1) {
    s += "x" + std::to_string(std::countr_zero(rest));
  }
  return s;
}

std::optional<GrassmannMonomial> GrassmannMonomial::parse(
    std::string_view text) {
  if (text == "1") return unit();
  std::uint64_t bits = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') return std::nullopt;
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    unsigned idx = 0;
    for (std::size_t k = start; k < pos; ++k) idx = idx * 10 + (text[k] - '0');
    if (idx >= kMaxIndex) return std::nullopt;
    std::uint64_t bit = std::uint64_t{1} << idx;
    if (bits & bit) return std::nullopt;  // repeated generator squares to zero
    bits |= bit;
  }
  return from_bits(bits);
}

}  // namespace plie
