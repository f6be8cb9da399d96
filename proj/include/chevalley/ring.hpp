#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace chevalley {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Rational zero_like(const Rational&) { return Rational(0); }

/// Element a + b*i of Z[i].
struct Gaussian {
  Integer re;
  Integer im;

  Gaussian() = default;
  Gaussian(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian unit_i() { return Gaussian(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  std::string to_string() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re, -a.im); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline Gaussian zero_like(const Gaussian&) { return Gaussian(); }

enum class RingKind { Integer, Rational, PrimeField, GaussianInteger };

/// One of the commutative rings scalars may live in.
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integer, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rational, 0); }
  static RingSpec gaussian_integers() { return RingSpec(RingKind::GaussianInteger, 0); }
  /// Throws UsageError unless p is a prime below 2^31.
  static RingSpec prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ == RingKind::Rational || kind_ == RingKind::PrimeField; }
  /// "ZZ", "QQ", "GF(p)" or "ZZ[i]".
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// A scalar tagged with the ring it belongs to. Operations between elements
/// of different rings raise UsageError.
class RingElem {
 public:
  /// The integer 0.
  RingElem() : spec_(RingSpec::integers()), value_(Integer(0)) {}

  static RingElem zero(const RingSpec& spec) { return from_integer(spec, Integer(0)); }
  static RingElem one(const RingSpec& spec) { return from_integer(spec, Integer(1)); }
  /// Image of n under the canonical map Z -> R.
  static RingElem from_integer(const RingSpec& spec, const Integer& n);
  /// Image of a rational number; fails with NotInvertible when the
  /// denominator is not a unit of the ring.
  static RingElem from_rational(const RingSpec& spec, const Rational& x);
  static RingElem from_gaussian(const RingSpec& spec, const Gaussian& z);
  /// Parses the serialized form produced by to_string().
  static RingElem parse(const RingSpec& spec, std::string_view text);

  const RingSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  RingElem inverse() const;
  RingElem pow(long exponent) const;

  const Integer& as_integer() const;
  const Rational& as_rational() const;
  std::uint32_t as_residue() const;
  const Gaussian& as_gaussian() const;
  /// Integer, rational and Gaussian-with-zero-imaginary elements as Q.
  Rational to_rational() const;

  /// Decimal ("-12"), fraction ("5/6"), residue ("2") or "a+bi" form.
  std::string to_string() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator-(const RingElem& a);
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  using Payload = std::variant<Integer, Rational, std::uint32_t, Gaussian>;
  RingElem(const RingSpec& spec, Payload value) : spec_(spec), value_(std::move(value)) {}
  void require_same_ring(const RingElem& o) const;

  RingSpec spec_;
  Payload value_;
};

inline bool is_zero(const RingElem& x) { return x.is_zero(); }
inline RingElem zero_like(const RingElem& x) { return RingElem::zero(x.spec()); }

}  // namespace chevalley
