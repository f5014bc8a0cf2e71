#include "plie/textio.hpp"

#include <cctype>
#include <vector>

namespace plie {

namespace {

constexpr std::string_view kDot = "·";  // '·'

void append_sep(std::string& s) { s += kDot; }

// split on top-level '+' where '-' also starts a new summand (kept with it);
// separators '·' (UTF-8) and '*' delimit factors inside a summand
std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '+') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch == '-' && !cur.empty()) {
      out.push_back(cur);
      cur = "-";
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> split_factors(std::string_view term) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < term.size();) {
    if (term[i] == '*') {
      out.push_back(cur);
      cur.clear();
      ++i;
    } else if (term.compare(i, kDot.size(), kDot) == 0) {
      out.push_back(cur);
      cur.clear();
      i += kDot.size();
    } else {
      cur += term[i];
      ++i;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed element: " + std::string(text));
}

}  // namespace

std::string term_text(const Scalar& c, GrassmannMonomial tail, unsigned head) {
  std::string s = c.str();
  if (!tail.empty()) {
    append_sep(s);
    s += tail.str();
  }
  append_sep(s);
  s += "v" + std::to_string(head);
  return s;
}

std::string to_text(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += term_text(c, k.tail, k.head);
  }
  return s;
}

Element parse_element(const Ring& ring, std::string_view text) {
  Element out(ring);
  auto terms = split_terms(text);
  if (terms.empty()) bad(text);
  if (terms.size() == 1 && terms[0] == "0") return out;
  for (const auto& term : terms) {
    auto factors = split_factors(term);
    // optional leading sign folded into the coefficient
    bool negate = false;
    if (!factors.empty() && !factors[0].empty() && factors[0][0] == '-' &&
        (factors[0].size() == 1 ||
         !std::isdigit(static_cast<unsigned char>(factors[0][1])))) {
      negate = true;
      factors[0].erase(0, 1);
      if (factors[0].empty()) factors.erase(factors.begin());
    }
    if (factors.empty() || factors.back().empty()) bad(text);

    // last factor must be the head v{n}
    std::string headf = factors.back();
    factors.pop_back();
    if (headf.size() < 2 || headf[0] != 'v') bad(text);
    unsigned head = 0;
    for (std::size_t i = 1; i < headf.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(headf[i]))) bad(text);
      head = head * 10 + (headf[i] - '0');
    }

    Scalar coeff = Scalar::one(ring);
    GrassmannMonomial tail = GrassmannMonomial::unit();
    std::size_t i = 0;
    if (i < factors.size() && !factors[i].empty() && factors[i][0] != 'x') {
      coeff = Scalar::parse(ring, factors[i]);
      ++i;
    }
    if (i < factors.size()) {
      auto m = GrassmannMonomial::parse(factors[i]);
      if (!m) bad(text);
      tail = *m;
      ++i;
    }
    if (i != factors.size()) bad(text);
    if (negate) coeff = -coeff;
    out.add({head, tail}, coeff);
  }
  return out;
}

}  // namespace plie
