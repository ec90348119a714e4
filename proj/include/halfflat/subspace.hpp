#pragma once

#include <vector>

#include "halfflat/kform.hpp"
#include "halfflat/linalg.hpp"

namespace halfflat {

/// Linear subspace of the degree-k piece of the exterior algebra on n
/// generators, held as the RREF of a spanning set over the canonical basis.
/// Two subspaces are equal iff their RREF rows are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Lambda^k on n generators.
  Subspace(int n, int degree);

  static Subspace from_vectors(int n, int degree, const std::vector<Vector>& vectors);
  static Subspace whole(int n, int degree);

  int dim() const { return static_cast<int>(rows_.rows()); }
  int ambient_dim() const { return binomial(n_, degree_); }
  int generators() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_dim(); }

  const Matrix& rref() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;
  std::vector<KForm> basis() const;

  bool contains(const Vector& v) const;
  bool contains(const KForm& a) const;
  bool contains(const Subspace& other) const;

  /// Reduction of v modulo the subspace (zero iff v is a member).
  Vector reduce(Vector v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  int degree_ = 0;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Span of forms of a common degree. Throws std::invalid_argument on mixed
/// degrees or ambient dimensions; an empty list needs explicit (n, degree).
Subspace span(const std::vector<KForm>& forms);
Subspace span(int n, int degree, const std::vector<KForm>& forms);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Kernel of a linear map Lambda^k -> W given by the images of the canonical
/// basis of Lambda^k (images[i] is the image of canonical_basis(n, k)[i],
/// written in any fixed coordinates of W).
Subspace kernel(int n, int degree, const std::vector<Vector>& images);
/// Same, with images given as forms of one common degree.
Subspace kernel(int n, int degree, const std::vector<KForm>& images);

/// Linear combinations of `domain` (a list of forms of degree k) whose image
/// vanishes; images[i] is the image of domain[i] in fixed coordinates.
Subspace kernel_on(int n, int degree, const std::vector<KForm>& domain, const std::vector<Vector>& images);

/// Members x of `domain` (a subspace) whose image under the linear map
/// (given on the canonical basis) lies in `target`.
Subspace preimage(const Subspace& domain, const std::vector<KForm>& images, const Subspace& target);

/// Stack of coordinate vectors, used to build multi-target maps.
Vector concat(const std::vector<Vector>& parts);

}  // namespace halfflat
