#include "plie/scalars.hpp"

#include <boost/multiprecision/integer.hpp>

namespace plie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("prime_field: " + std::to_string(p) +
                                " is not prime");
  }
  return {RingKind::PrimeField, p};
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(prime);
  }
  return "?";
}

Scalar Scalar::of(const Ring& ring, long long v) { return of(ring, Int(v)); }

Scalar Scalar::of(const Ring& ring, Int v) {
  Scalar s(ring);
  s.num_ = std::move(v);
  s.normalize();
  return s;
}

Scalar Scalar::fraction(const Ring& ring, Int num, Int den) {
  if (den == 0) throw std::domain_error("fraction: zero denominator");
  switch (ring.kind) {
    case RingKind::Integers: {
      Int q, r;
      boost::multiprecision::divide_qr(num, den, q, r);
      if (r != 0) throw std::domain_error("fraction: not an integer");
      return of(ring, q);
    }
    case RingKind::Rationals: {
      Scalar s(ring);
      s.num_ = std::move(num);
      s.den_ = std::move(den);
      s.normalize();
      return s;
    }
    case RingKind::PrimeField:
      return of(ring, std::move(num)) * of(ring, std::move(den)).inverse();
  }
  throw std::logic_error("fraction: bad ring");
}

void Scalar::normalize() {
  switch (ring_.kind) {
    case RingKind::Integers:
      den_ = 1;
      break;
    case RingKind::Rationals: {
      if (num_ == 0) {
        den_ = 1;
        break;
      }
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      Int g = boost::multiprecision::gcd(num_, den_);
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
      break;
    }
    case RingKind::PrimeField: {
      den_ = 1;
      num_ %= ring_.prime;
      if (num_ < 0) num_ += ring_.prime;
      break;
    }
  }
}

void Scalar::check_ring(const Scalar& o) const {
  if (!(ring_ == o.ring_)) {
    throw std::invalid_argument("scalar ring mismatch: " + ring_.name() +
                                " vs " + o.ring_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  r.normalize();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_ring(o);
  Scalar r(ring_);
  r.num_ = num_ * o.den_ + o.num_ * den_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_ring(o);
  Scalar r(ring_);
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

Scalar Scalar::times(long long k) const {
  Scalar r = *this;
  r.num_ *= k;
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (ring_.kind) {
    case RingKind::Integers:
      if (num_ == 1 || num_ == -1) return *this;
      throw std::domain_error("inverse: not a unit of Z");
    case RingKind::Rationals:
      return fraction(ring_, den_, num_);
    case RingKind::PrimeField: {
      // extended Euclid on machine words; the modulus is a 32-bit prime
      long long a = num_.convert_to<long long>();
      long long m = ring_.prime;
      long long t = 0, newt = 1, r = m, newr = a;
      while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
      }
      if (t < 0) t += m;
      return of(ring_, t);
    }
  }
  throw std::logic_error("inverse: bad ring");
}

Scalar Scalar::halved() const {
  if (ring_.characteristic() == 2) {
    throw std::domain_error("halved: characteristic 2");
  }
  switch (ring_.kind) {
    case RingKind::Integers: {
      if (num_ % 2 != 0) throw std::domain_error("halved: odd integer");
      return of(ring_, num_ / 2);
    }
    default:
      return *this * of(ring_, 2).inverse();
  }
}

std::string Scalar::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Scalar Scalar::parse(const Ring& ring, std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return of(ring, Int(std::string(text)));
    }
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    return fraction(ring, num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad scalar literal: " + std::string(text));
  }
}

}  // namespace plie
