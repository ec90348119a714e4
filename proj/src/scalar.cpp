#include "halfflat/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace halfflat {

Scalar::Scalar(mpq_class rational, mpq_class surd)
    : rational_(std::move(rational)), surd_(std::move(surd)) {
  rational_.canonicalize();
  surd_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  rational_ += other.rational_;
  surd_ += other.surd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  rational_ -= other.rational_;
  surd_ -= other.surd_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_rational() && other.is_rational()) {
    rational_ *= other.rational_;
    return *this;
  }
  mpq_class r = rational_ * other.rational_ + 2 * surd_ * other.surd_;
  mpq_class s = rational_ * other.surd_ + surd_ * other.rational_;
  rational_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_rational()) return Scalar(1 / rational_);
  // (a + b r2)^-1 = (a - b r2) / (a^2 - 2 b^2); the norm is nonzero since r2 is irrational.
  mpq_class norm = rational_ * rational_ - 2 * surd_ * surd_;
  return Scalar(rational_ / norm, -surd_ / norm);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_.get_str();
  std::string surd;
  if (surd_ == 1) {
    surd = "r2";
  } else if (surd_ == -1) {
    surd = "-r2";
  } else {
    surd = surd_.get_str() + "r2";
  }
  if (sgn(rational_) == 0) return surd;
  std::string out = "(" + rational_.get_str();
  if (surd.front() != '-') out += "+";
  return out + surd + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace halfflat
