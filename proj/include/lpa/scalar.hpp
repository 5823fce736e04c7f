#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lpa {

/// An element of Q or of a prime field F_p. Residues carry their modulus so
/// scalars are self-contained; mixing fields raises FieldMismatch.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t value, std::uint64_t modulus);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const;
  bool is_one() const;
  /// Sign used when rendering; residues are never negative.
  bool is_negative() const { return is_rational() && sgn(q_) < 0; }

  const mpq_class& as_rational() const { return q_; }
  std::uint64_t as_residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar abs() const;

  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Coefficient field selector: the rationals or F_p for a prime p < 2^62.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(const mpz_class& n) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  /// Parses an integer literal, reducing mod p in a prime field.
  Scalar from_string(std::string_view digits) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace lpa
