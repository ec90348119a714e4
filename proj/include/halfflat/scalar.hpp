#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace halfflat {

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator). Rationals embed with a zero surd part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class rational, mpq_class surd = 0);
  static Scalar sqrt2() { return Scalar(0, 1); }
  static Scalar fraction(long num, long den);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& surd_part() const { return surd_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }
  bool is_one() const { return is_rational() && rational_ == 1; }

  Scalar operator-() const { return Scalar(-rational_, -surd_); }
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rational_ == b.rational_ && a.surd_ == b.surd_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Literal form used by every grammar in the library: "3", "-1/2",
  /// "r2", "1/2r2", and "(1+r2)" when both parts are nonzero.
  std::string to_string() const;

 private:
  mpq_class rational_{0};
  mpq_class surd_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace halfflat
