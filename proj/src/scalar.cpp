#include "lpa/scalar.hpp"

#include <charconv>
#include <limits>

#include "lpa/error.hpp"

namespace lpa {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.r_ = value % modulus;
  return s;
}

bool Scalar::is_zero() const { return is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (modulus_ != o.modulus_) {
    throw Error(ErrorCode::FieldMismatch, "scalars from different coefficient fields");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (is_rational()) return rational(q_ + o.q_);
  std::uint64_t s = r_ + o.r_;
  if (s >= modulus_) s -= modulus_;
  return residue(s, modulus_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (is_rational()) return rational(q_ * o.q_);
  return residue(mul_mod(r_, o.r_, modulus_), modulus_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return rational(-q_);
  return residue(r_ == 0 ? 0 : modulus_ - r_, modulus_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  if (is_rational()) return rational(1 / q_);
  // Fermat: p is prime.
  return residue(pow_mod(r_, modulus_ - 2, modulus_), modulus_);
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (modulus_ != o.modulus_) return false;
  return is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (is_rational()) return q_.get_str();
  return std::to_string(r_);
}

Field Field::prime(std::uint64_t p) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  mpz_class z(std::to_string(p));
  if (p < 2 || p >= limit || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::NonPrimeModulus, "modulus " + std::to_string(p) + " is not a prime below 2^62",
                {{"modulus", std::to_string(p)}});
  }
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  constexpr std::string_view prefix = "fp:";
  if (spec.starts_with(prefix)) {
    auto digits = spec.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    throw Error(ErrorCode::NonPrimeModulus, "cannot read modulus '" + std::string(digits) + "'");
  }
  throw Error(ErrorCode::UsageError, "field must be 'q' or 'fp:<p>', got '" + std::string(spec) + "'");
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar Field::zero() const { return is_rational() ? Scalar::rational(0) : Scalar::residue(0, p_); }

Scalar Field::one() const { return is_rational() ? Scalar::rational(1) : Scalar::residue(1, p_); }

Scalar Field::from_integer(const mpz_class& n) const {
  if (is_rational()) return Scalar::rational(mpq_class(n));
  return Scalar::residue(reduce(n, p_), p_);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  if (is_rational()) return Scalar::rational(mpq_class(num, den));
  auto d = from_integer(den);
  if (d.is_zero()) {
    throw Error(ErrorCode::ZeroDenominator, "denominator " + den.get_str() + " vanishes in " + name());
  }
  return from_integer(num) / d;
}

Scalar Field::from_string(std::string_view digits) const {
  return from_integer(mpz_class(std::string(digits), 10));
}

}  // namespace lpa
