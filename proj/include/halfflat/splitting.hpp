#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfflat/coframe.hpp"
#include "halfflat/errors.hpp"
#include "halfflat/lie_algebra.hpp"
#include "halfflat/linalg.hpp"
#include "halfflat/subspace.hpp"

namespace halfflat {

/// Raised when a proposed splitting violates d(L^{p,q}) in L^{p+1,q} + L^{p+2,q-1}.
class IncoherentSplitting : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A coherent splitting g* = V1 + V2 of a fixed Lie algebra. Internally the
/// algebra is rewritten in the adapted coframe (a basis of V1 followed by a
/// basis of V2), in which every L^{p,q} is a coordinate subspace: a basis
/// element f^I lies in L^{p,q} with p = #(I ∩ {1..r}), r = dim V1.
class CoherentSplitting {
 public:
  const LieAlgebra& algebra() const { return algebra_; }
  const Subspace& v1() const { return v1_; }
  const Subspace& v2() const { return v2_; }
  /// dim V1.
  int rank() const { return v1_.dim(); }
  int dim() const { return algebra_.dim(); }
  /// Spans L^{r,0}: the two-form it was built from, or the wedge of the V1 basis.
  const KForm& generator() const { return generator_; }
  const Coframe& coframe() const { return coframe_; }
  /// The algebra in the adapted coframe.
  const LieAlgebra& adapted() const { return adapted_; }

  /// Bidegree p of a basis element of the adapted coframe.
  int p_of(IndexSet set) const { return set.count_below(rank() + 1); }
  /// Canonical basis of L^{p,q} in adapted coordinates (empty when out of range).
  std::vector<IndexSet> bidegree_basis(int p, int q) const;

 private:
  friend CoherentSplitting make_splitting(const LieAlgebra&, const Subspace&, std::optional<Subspace>,
                                          std::optional<KForm>);
  CoherentSplitting(LieAlgebra g, Subspace v1, Subspace v2, KForm generator, Coframe frame, LieAlgebra adapted);

  LieAlgebra algebra_;
  Subspace v1_;
  Subspace v2_;
  KForm generator_;
  Coframe coframe_;
  LieAlgebra adapted_;
};

/// Whether V1 (with any complement) satisfies the coherence condition; this
/// depends only on V1. V1 must be a nonzero subspace of L^1.
bool is_coherent(const LieAlgebra& g, const Subspace& v1);

/// Builds and certifies a splitting. Without v2 the complement is spanned by
/// the e^j whose columns are not pivots of V1's RREF. Throws
/// IncoherentSplitting, or std::invalid_argument when v1 + v2 is not g*.
CoherentSplitting make_splitting(const LieAlgebra& g, const Subspace& v1, std::optional<Subspace> v2 = std::nullopt,
                                 std::optional<KForm> generator = std::nullopt);

/// Solutions of: alpha in L^2(ker d), alpha ^ de^i = 0 for all i. Requires a
/// nilpotent algebra satisfying Jacobi (DomainError otherwise); for other
/// algebras check coherence of a chosen V1 with is_coherent.
Subspace generator_space(const LieAlgebra& g);

/// The splitting with V1 the factor plane of a simple nonzero two-form.
/// Throws std::invalid_argument when alpha is not simple or zero, and
/// IncoherentSplitting when the plane is not coherent.
CoherentSplitting splitting_from_generator(const LieAlgebra& g, const KForm& alpha);

/// delta1 and delta2 as matrices between the canonical bases of the L^{p,q}
/// (bidegree_basis order, adapted coordinates). Column j is the image of the
/// j-th basis element.
class SplitDifferential {
 public:
  explicit SplitDifferential(const CoherentSplitting& s);
  /// L^{p,q} -> L^{p+1,q}; out-of-range bidegrees give correctly sized zero matrices.
  Matrix delta1(int p, int q) const;
  /// L^{p,q} -> L^{p+2,q-1}.
  Matrix delta2(int p, int q) const;
  int rank() const { return r_; }
  int corank() const { return s_; }

 private:
  std::size_t slot(int p, int q) const;
  std::size_t size(int p, int q) const;
  int r_ = 0;
  int s_ = 0;
  std::vector<Matrix> delta1_;
  std::vector<Matrix> delta2_;
};

SplitDifferential split_d(const LieAlgebra& g, const CoherentSplitting& s);

/// Filtration cohomology of a splitting, with p in 0..r and q in 0..n-r.
struct HpqTable {
  int rank = 0;          // r = dim V1
  int dim = 0;           // n
  std::vector<std::vector<int>> h;  // h[p][q]
  std::vector<int> betti;           // b_0..b_n
  std::vector<std::vector<int>> z_dims;  // dim Z^k_p, [k][p] for p in 0..r+1
  std::vector<std::vector<int>> h_dims;  // dim H^k_p, same shape

  int at(int p, int q) const;
  /// h^{p,q} = h^{r-p,n-r-q} for all p, q.
  bool satisfies_duality() const;
  /// sum_{p+q=k} h^{p,q} = b_k for all k.
  bool sums_to_betti() const;
};

HpqTable hpq(const LieAlgebra& g, const CoherentSplitting& s);

/// First and second pages of the spectral sequence. E_1 is the delta1
/// cohomology; E_2 is its cohomology under the map induced by delta2.
struct E1Table {
  int rank = 0;
  int dim = 0;
  std::vector<std::vector<int>> e1;  // [p][q]
  std::vector<std::vector<int>> e2;  // [p][q]
  /// E_1^{0,2} = ker(delta1 on L^{0,2}) in e-coordinates.
  Subspace e1_02;

  int e1_at(int p, int q) const;
  int e2_at(int p, int q) const;
};

/// Throws std::logic_error if rank 2 and the E_2 page differs from h^{p,q}
/// (the sequence must collapse there).
E1Table e1_term(const LieAlgebra& g, const CoherentSplitting& s);

/// Closed formulas valid for unimodular six-dimensional algebras and rank-2
/// splittings; DomainError otherwise.
int prop2_h03(const LieAlgebra& g, const CoherentSplitting& s);
bool prop2_h04_zero(const LieAlgebra& g, const CoherentSplitting& s);

/// Every identity tying hpq, e1_term and the closed formulas together, for a
/// rank-2 splitting of a six-dimensional algebra (the unimodular ones get the
/// duality and closed-formula checks too). Returns one message per violation.
std::vector<std::string> check_proposition2(const LieAlgebra& g, const CoherentSplitting& s);

/// The table of the splitting with V1 = ker d. Requires derived length <= 2
/// (DomainError otherwise).
HpqTable canonical_hpq(const LieAlgebra& g);
CoherentSplitting canonical_splitting(const LieAlgebra& g);

}  // namespace halfflat
