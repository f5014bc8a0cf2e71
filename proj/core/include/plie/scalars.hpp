#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plie {

/// Arbitrary-precision integer used for all exact coefficient work.
using Int = boost::multiprecision::cpp_int;

enum class RingKind : std::uint8_t { Integers, Rationals, PrimeField };

bool is_prime(std::uint64_t n);

/// Runtime descriptor of the coefficient ring of an algebra session.
/// The characteristic is a session parameter, never a compile-time choice.
struct Ring {
  RingKind kind = RingKind::Rationals;
  std::uint32_t prime = 0;  // modulus, set iff kind == PrimeField

  static Ring integers() { return {RingKind::Integers, 0}; }
  static Ring rationals() { return {RingKind::Rationals, 0}; }
  static Ring prime_field(std::uint32_t p);

  unsigned characteristic() const {
    return kind == RingKind::PrimeField ? prime : 0u;
  }
  bool is_field() const { return kind != RingKind::Integers; }
  bool operator==(const Ring&) const = default;
  std::string name() const;
};

/// Exact scalar in one of the supported rings.  Values are kept normalized:
/// rationals in lowest terms with positive denominator, prime-field residues
/// in [0, p), integers with denominator 1.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Ring& ring) : ring_(ring) {}

  static Scalar of(const Ring& ring, long long v);
  static Scalar of(const Ring& ring, Int v);
  static Scalar fraction(const Ring& ring, Int num, Int den);
  static Scalar zero(const Ring& ring) { return Scalar(ring); }
  static Scalar one(const Ring& ring) { return of(ring, 1); }

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar times(long long k) const;

  /// Multiplicative inverse.  Defined for nonzero field elements and for
  /// +-1 over the integers; throws std::domain_error otherwise.
  Scalar inverse() const;

  /// Exact division by 2.  Throws in characteristic 2, and over the
  /// integers when the value is odd.
  Scalar halved() const;

  bool operator==(const Scalar& o) const {
    return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  std::string str() const;
  static Scalar parse(const Ring& ring, std::string_view text);

 private:
  void normalize();
  void check_ring(const Scalar& o) const;

  Ring ring_{RingKind::Rationals, 0};
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace plie
