#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "axial/error.hpp"

namespace axial {

enum class FieldKind { Rationals, PrimeField };

/// Descriptor of the base field: the rationals, or F_p for an odd prime p.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  /// Throws BadParameter unless p is an odd prime below 2^32.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept as reduced GMP fractions,
/// residues as canonical representatives in [0, p).
class Scalar {
 public:
  /// Rational zero; containers need a default.
  Scalar() = default;

  static Scalar zero(Field f) { return from_int(0, f); }
  static Scalar one(Field f) { return from_int(1, f); }
  static Scalar from_int(long value, Field f);
  static Scalar from_fraction(long num, long den, Field f);
  static Scalar from_mpq(const mpq_class& q, Field f);
  /// "p/q" or an integer; over F_p fractions are read as a quotient of residues.
  static Scalar parse(std::string_view text, Field f);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Over the rationals only.
  const mpq_class& rational() const;
  /// Over F_p only.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "p/q" (or integer) over Q, decimal residue over F_p.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  void require_same_field(const Scalar& o) const;

  Field field_ = Field::rationals();
  std::variant<mpq_class, std::uint64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A square root of x if the field contains one. The canonical root is the
/// non-negative one over Q and the smaller residue over F_p.
std::optional<Scalar> sqrt_in_field(const Scalar& x);

}  // namespace axial

template <>
struct std::hash<axial::Scalar> {
  std::size_t operator()(const axial::Scalar& s) const { return s.hash(); }
};
