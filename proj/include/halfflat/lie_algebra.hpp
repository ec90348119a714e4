#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfflat/kform.hpp"
#include "halfflat/subspace.hpp"

namespace halfflat {

/// Lie algebra presented dually: the Chevalley-Eilenberg differential on the
/// degree-one generators e^1..e^n, extended to the whole exterior algebra as
/// the unique antiderivation. Immutable after construction.
class LieAlgebra {
 public:
  /// d_generators[i] is d(e^{i+1}); each must be a two-form on n = size()
  /// generators with 2 <= n <= 9. The Jacobi identity is not enforced here
  /// (see check_jacobi).
  explicit LieAlgebra(std::vector<KForm> d_generators, std::optional<std::string> source_notation = std::nullopt);

  int dim() const { return static_cast<int>(d1_.size()); }
  const std::vector<KForm>& d1() const { return d1_; }
  const KForm& d_generator(int i) const { return d1_.at(static_cast<std::size_t>(i - 1)); }
  const std::optional<std::string>& source_notation() const { return source_; }

  /// Images of the canonical basis of Lambda^k under d.
  const std::vector<KForm>& d_on_basis(int k) const { return d_basis_.at(static_cast<std::size_t>(k)); }
  /// Same as column vectors in Lambda^{k+1} coordinates.
  std::vector<Vector> d_matrix_columns(int k) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.d1_ == b.d1_; }

 private:
  std::vector<KForm> d1_;
  std::optional<std::string> source_;
  std::vector<std::vector<KForm>> d_basis_;
};

/// Parses Salamon notation, e.g. "(0,0,12,13,23,14-25)". Whitespace and
/// surrounding parentheses are ignored; "ab" means e^a wedge e^b (so "52" is
/// -e^{25}); coefficients use the scalar syntax "c*ab". Throws ParseError.
LieAlgebra parse_notation(std::string_view text);

/// Canonical notation: terms in basis order, "ab" with a < b, explicit
/// "c*ab" only for coefficients other than +-1.
std::string format_notation(const LieAlgebra& g);

/// The Chevalley-Eilenberg differential of a homogeneous form.
KForm differential(const LieAlgebra& g, const KForm& a);

/// d^2 = 0 on every generator (equivalent to the Jacobi identity).
bool check_jacobi(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
/// Unimodularity read off from closedness of all (n-1)-forms.
bool is_unimodular_by_closed_forms(const LieAlgebra& g);
/// Unimodularity read off from the top Betti number b_n = 1.
bool is_unimodular_by_top_betti(const LieAlgebra& g);
/// Both routes, which must agree (throws std::logic_error otherwise).
bool is_unimodular(const LieAlgebra& g);
/// Least m with D^m(g) = 0; std::nullopt when g is not solvable.
std::optional<int> derived_length(const LieAlgebra& g);

/// Closed forms Z^k, exact forms B^k.
Subspace closed_forms(const LieAlgebra& g, int k);
Subspace exact_forms(const LieAlgebra& g, int k);
/// ker d on Lambda^1.
Subspace kernel_d(const LieAlgebra& g);

/// Some b with db = a, or std::nullopt when a is not exact.
std::optional<KForm> primitive(const LieAlgebra& g, const KForm& a);

struct CohomologySummary {
  std::vector<int> betti;         // b_0..b_n
  std::vector<Subspace> closed;   // Z^k
  std::vector<Subspace> exact;    // B^k
};

/// Ordinary Lie algebra cohomology. Throws DomainError when the Jacobi
/// identity fails.
CohomologySummary cohomology(const LieAlgebra& g);

/// The same algebra written in the coframe f^a = frame[a-1] (one-forms in
/// e-coordinates forming a basis). Throws DomainError when degenerate.
LieAlgebra change_coframe(const LieAlgebra& g, const std::vector<KForm>& frame);

}  // namespace halfflat
