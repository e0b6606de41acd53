#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace germs {

/// Coefficient field descriptor: the rationals, or a prime field GF(p).
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are integers in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Rational value, or the canonical residue in [0, p).
  const mpq_class& value() const { return value_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Rationals print in lowest terms ("-3/2"); residues print as their
  /// symmetric representative so that p-1 shows as "-1".
  std::string to_string() const;

  /// True when the printed form starts with a minus sign.
  bool prints_negative() const;

 private:
  void normalize();

  Field field_;
  mpq_class value_;
};

}  // namespace germs
