#pragma once

#include <vector>

#include "halfflat/kform.hpp"
#include "halfflat/linalg.hpp"

namespace halfflat {

/// An ordered basis f^1..f^n of one-forms, given in e-coordinates, with the
/// substitutions converting forms between the two coordinate systems.
class Coframe {
 public:
  /// Throws DomainError unless the forms are n linearly independent one-forms on n generators.
  explicit Coframe(std::vector<KForm> forms);

  int dim() const { return static_cast<int>(forms_.size()); }
  const std::vector<KForm>& forms() const { return forms_; }
  /// Row a holds the e-coefficients of f^{a+1}.
  const Matrix& matrix() const { return matrix_; }

  /// Rewrites a form given in e-coordinates in f-coordinates.
  KForm to_frame(const KForm& a) const;
  /// Rewrites a form given in f-coordinates in e-coordinates.
  KForm from_frame(const KForm& a) const;
  /// The vector X_a (components along e_1..e_n) with f^b(X_a) = delta_ab.
  Vector dual_vector(int a) const;

 private:
  std::vector<KForm> forms_;
  Matrix matrix_;
  Matrix inverse_;
  std::vector<KForm> e_in_frame_;  // e^i written in f-coordinates
};

}  // namespace halfflat
