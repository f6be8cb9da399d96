#include "chevalley/ring.hpp"

#include <regex>

#include "chevalley/errors.hpp"

namespace chevalley {

namespace {

std::uint32_t reduce_mod(const Integer& n, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw NotInvertible("residue " + std::to_string(a) + " not invertible mod " + std::to_string(p));
  std::int64_t inv = s0 % static_cast<std::int64_t>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  static const std::regex kInt(R"(^[+-]?[0-9]+$)");
  if (!std::regex_match(s, kInt)) throw UsageError("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

std::string Gaussian::to_string() const {
  std::string out = re.get_str();
  out += sgn(im) < 0 ? "-" : "+";
  Integer mag = abs(im);
  out += mag.get_str();
  out += "i";
  return out;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Integer r = re * o.re - im * o.im;
  Integer i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw UsageError("prime field modulus must be below 2^31");
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  return RingSpec(RingKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::Integer: return "ZZ";
    case RingKind::Rational: return "QQ";
    case RingKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    case RingKind::GaussianInteger: return "ZZ[i]";
  }
  return "?";
}

RingElem RingElem::from_integer(const RingSpec& spec, const Integer& n) {
  switch (spec.kind()) {
    case RingKind::Integer: return RingElem(spec, n);
    case RingKind::Rational: return RingElem(spec, Rational(n));
    case RingKind::PrimeField: return RingElem(spec, reduce_mod(n, spec.modulus()));
    case RingKind::GaussianInteger: return RingElem(spec, Gaussian(n, 0));
  }
  throw UsageError("unknown ring");
}

RingElem RingElem::from_rational(const RingSpec& spec, const Rational& value) {
  if (sgn(value.get_den()) == 0) throw NotInvertible("zero denominator");
  Rational x = value;
  x.canonicalize();
  if (spec.kind() == RingKind::Rational) return RingElem(spec, x);
  if (spec.kind() == RingKind::PrimeField) {
    std::uint32_t den = reduce_mod(x.get_den(), spec.modulus());
    if (den == 0) throw NotInvertible("denominator vanishes in " + spec.name());
    std::uint64_t num = reduce_mod(x.get_num(), spec.modulus());
    return RingElem(spec, static_cast<std::uint32_t>(num * inverse_mod(den, spec.modulus()) % spec.modulus()));
  }
  if (x.get_den() != 1) throw NotInvertible("non-integral rational in " + spec.name());
  return from_integer(spec, x.get_num());
}

RingElem RingElem::from_gaussian(const RingSpec& spec, const Gaussian& z) {
  if (spec.kind() == RingKind::GaussianInteger) return RingElem(spec, z);
  if (!::chevalley::is_zero(z.im)) throw UsageError("Gaussian integer with imaginary part outside ZZ[i]");
  return from_integer(spec, z.re);
}

RingElem RingElem::parse(const RingSpec& spec, std::string_view text) {
  std::string s(text);
  switch (spec.kind()) {
    case RingKind::Integer:
    case RingKind::PrimeField:
      return from_integer(spec, parse_integer(s));
    case RingKind::Rational: {
      auto slash = s.find('/');
      if (slash == std::string::npos) return from_integer(spec, parse_integer(s));
      Integer num = parse_integer(s.substr(0, slash));
      Integer den = parse_integer(s.substr(slash + 1));
      if (::chevalley::is_zero(den)) throw UsageError("zero denominator in '" + s + "'");
      Rational q(num, den);
      q.canonicalize();
      return RingElem(spec, q);
    }
    case RingKind::GaussianInteger: {
      static const std::regex kGauss(R"(^([+-]?[0-9]+)([+-])([0-9]+)i$)");
      std::smatch m;
      if (std::regex_match(s, m, kGauss)) {
        Integer im = parse_integer(m[3].str());
        if (m[2].str() == "-") im = -im;
        return RingElem(spec, Gaussian(parse_integer(m[1].str()), im));
      }
      return from_integer(spec, parse_integer(s));
    }
  }
  throw UsageError("unknown ring");
}

bool RingElem::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 0;
        } else {
          return ::chevalley::is_zero(v);
        }
      },
      value_);
}

bool RingElem::is_one() const { return *this == one(spec_); }

bool RingElem::is_unit() const {
  switch (spec_.kind()) {
    case RingKind::Integer: return abs(as_integer()) == 1;
    case RingKind::Rational:
    case RingKind::PrimeField: return !is_zero();
    case RingKind::GaussianInteger: {
      const Gaussian& z = as_gaussian();
      return z.re * z.re + z.im * z.im == 1;
    }
  }
  return false;
}

RingElem RingElem::inverse() const {
  switch (spec_.kind()) {
    case RingKind::Integer:
      if (!is_unit()) throw NotInvertible(to_string() + " is not a unit of ZZ");
      return *this;
    case RingKind::Rational:
      if (is_zero()) throw NotInvertible("0 is not invertible in QQ");
      return RingElem(spec_, Rational(1) / as_rational());
    case RingKind::PrimeField:
      if (is_zero()) throw NotInvertible("0 is not invertible in " + spec_.name());
      return RingElem(spec_, inverse_mod(as_residue(), spec_.modulus()));
    case RingKind::GaussianInteger: {
      if (!is_unit()) throw NotInvertible(to_string() + " is not a unit of ZZ[i]");
      const Gaussian& z = as_gaussian();
      return RingElem(spec_, Gaussian(z.re, -z.im));
    }
  }
  throw UsageError("unknown ring");
}

RingElem RingElem::pow(long exponent) const {
  RingElem base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  RingElem result = one(spec_);
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

const Integer& RingElem::as_integer() const {
  if (auto p = std::get_if<Integer>(&value_)) return *p;
  throw UsageError("element of " + spec_.name() + " is not an integer payload");
}

const Rational& RingElem::as_rational() const {
  if (auto p = std::get_if<Rational>(&value_)) return *p;
  throw UsageError("element of " + spec_.name() + " is not a rational payload");
}

std::uint32_t RingElem::as_residue() const {
  if (auto p = std::get_if<std::uint32_t>(&value_)) return *p;
  throw UsageError("element of " + spec_.name() + " is not a residue payload");
}

const Gaussian& RingElem::as_gaussian() const {
  if (auto p = std::get_if<Gaussian>(&value_)) return *p;
  throw UsageError("element of " + spec_.name() + " is not a Gaussian payload");
}

Rational RingElem::to_rational() const {
  switch (spec_.kind()) {
    case RingKind::Integer: return Rational(as_integer());
    case RingKind::Rational: return as_rational();
    case RingKind::GaussianInteger:
      if (::chevalley::is_zero(as_gaussian().im)) return Rational(as_gaussian().re);
      break;
    case RingKind::PrimeField: break;
  }
  throw UsageError("element of " + spec_.name() + " has no rational value");
}

std::string RingElem::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return v.to_string();
        } else {
          return v.get_str();
        }
      },
      value_);
}

void RingElem::require_same_ring(const RingElem& o) const {
  if (!(spec_ == o.spec_)) {
    throw UsageError("mixed-ring operands: " + spec_.name() + " and " + o.spec_.name());
  }
}

RingElem& RingElem::operator+=(const RingElem& o) {
  require_same_ring(o);
  switch (spec_.kind()) {
    case RingKind::Integer: std::get<Integer>(value_) += o.as_integer(); break;
    case RingKind::Rational: std::get<Rational>(value_) += o.as_rational(); break;
    case RingKind::PrimeField: {
      std::uint64_t s = std::uint64_t{as_residue()} + o.as_residue();
      value_ = static_cast<std::uint32_t>(s % spec_.modulus());
      break;
    }
    case RingKind::GaussianInteger: std::get<Gaussian>(value_) += o.as_gaussian(); break;
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  require_same_ring(o);
  return *this += -o;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  require_same_ring(o);
  switch (spec_.kind()) {
    case RingKind::Integer: std::get<Integer>(value_) *= o.as_integer(); break;
    case RingKind::Rational: std::get<Rational>(value_) *= o.as_rational(); break;
    case RingKind::PrimeField: {
      std::uint64_t s = std::uint64_t{as_residue()} * o.as_residue();
      value_ = static_cast<std::uint32_t>(s % spec_.modulus());
      break;
    }
    case RingKind::GaussianInteger: std::get<Gaussian>(value_) *= o.as_gaussian(); break;
  }
  return *this;
}

RingElem operator-(const RingElem& a) {
  switch (a.spec_.kind()) {
    case RingKind::Integer: return RingElem(a.spec_, Integer(-a.as_integer()));
    case RingKind::Rational: return RingElem(a.spec_, Rational(-a.as_rational()));
    case RingKind::PrimeField: {
      std::uint32_t r = a.as_residue();
      return RingElem(a.spec_, r == 0 ? 0U : a.spec_.modulus() - r);
    }
    case RingKind::GaussianInteger: return RingElem(a.spec_, -a.as_gaussian());
  }
  throw UsageError("unknown ring");
}

bool operator==(const RingElem& a, const RingElem& b) {
  a.require_same_ring(b);
  return a.value_ == b.value_;
}

}  // namespace chevalley
