#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace splitegh {

/// The coefficient field: the rationals, or a prime field F_p with p < 2^32.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws ArgumentError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  bool operator==(const Field&) const = default;

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact element of a Field.
///
/// Rational values are kept canonical (lowest terms, positive denominator).
/// Values whose numerator and denominator fit in 64 bits are stored inline
/// and only larger ones go to GMP; a value is inline exactly when it fits.
/// Prime-field values are kept as residues in [0, p) and never touch GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// The value as a rational; for prime fields the residue in [0, p).
  mpq_class to_rational() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// *this -= a * b, without allocating a temporary Scalar.
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals print as "a" or "a/b"; prime-field residues print in the
  /// symmetric range (-p/2, p/2].
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;
  mpq_class big_value() const;
  void assign(const mpq_class& q);
  void assign(__int128 num, __int128 den);

  Field field_;
  std::int64_t num_ = 0;  // rationals: numerator; prime fields: residue
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace splitegh
