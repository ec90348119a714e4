#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "halfflat/index_set.hpp"
#include "halfflat/scalar.hpp"

namespace halfflat {

using Vector = std::vector<Scalar>;

/// Homogeneous degree-k exterior form on an n-dimensional space, stored
/// sparsely over the canonical basis e^{i1...ik} (i1 < ... < ik). Zero
/// coefficients are never stored.
class KForm {
 public:
  using Terms = std::map<IndexSet, Scalar>;

  KForm() = default;
  KForm(int n, int degree);

  /// The basis element e^{set}.
  static KForm basis(int n, IndexSet set, Scalar coeff = 1);
  /// The one-form e^i.
  static KForm generator(int n, int i);
  static KForm constant(int n, Scalar value);
  /// Inverse of to_vector(): coefficients in canonical basis order.
  static KForm from_vector(int n, int degree, std::span<const Scalar> coeffs);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(IndexSet set) const;

  /// Adds coeff * e^{set}; the set must have size degree().
  void add_term(IndexSet set, const Scalar& coeff);

  Vector to_vector() const;

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(const Scalar& s);
  KForm operator-() const;
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const Scalar& s) { return a *= s; }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  /// Renders as `c*e^{i1..ik}` terms joined by +/-, e.g. "-e^{14}+e^{23}"
  /// or "1/2r2*e^{6}". The zero form renders as "0".
  std::string to_string() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KForm& a);

/// Exterior product. Mismatched ambient dimensions throw std::invalid_argument.
KForm wedge(const KForm& a, const KForm& b);
KForm wedge(std::span<const KForm> factors);

/// Interior product by the dual basis vector e_k.
KForm contract(int k, const KForm& a);
/// Interior product by the vector sum_k v[k-1] e_k.
KForm contract(std::span<const Scalar> vector, const KForm& a);

/// The algebra homomorphism of the exterior algebra sending e^i to images[i-1]
/// (all one-forms on a common space). Used for changes of basis.
KForm substitute(const KForm& a, std::span<const KForm> images);

/// Decomposability of a two-form: true iff a = xi ^ zeta for one-forms xi,
/// zeta, decided by a ^ a = 0. Throws std::invalid_argument unless degree 2.
bool is_simple(const KForm& a);
/// An explicit pair (xi, zeta) with xi ^ zeta = a, or std::nullopt when a is
/// not simple. The zero form factors as (0, 0).
std::optional<std::pair<KForm, KForm>> factor_simple(const KForm& a);

/// Top-degree coefficient of a form of degree n (0 for the zero form).
Scalar top_coefficient(const KForm& a);

}  // namespace halfflat
