#pragma once

#include <string_view>
#include <vector>

#include "halfflat/coframe.hpp"
#include "halfflat/lie_algebra.hpp"
#include "halfflat/linalg.hpp"

namespace halfflat {

/// An ordered coframe eta^1..eta^6 of a six-dimensional dual space, in
/// e-coordinates. Throws DomainError unless the forms are a basis.
class Frame {
 public:
  explicit Frame(std::vector<KForm> eta);
  /// e^1..e^6.
  static Frame identity();

  const std::vector<KForm>& eta() const { return coframe_.forms(); }
  const KForm& eta(int i) const { return coframe_.forms().at(static_cast<std::size_t>(i - 1)); }
  const Coframe& coframe() const { return coframe_; }
  /// Forms rendered one per entry, e.g. {"e^{1}-e^{2}", ...}.
  std::vector<std::string> to_strings() const;

 private:
  Coframe coframe_;
};

/// Six comma-separated one-forms, e.g. "e1-e2, e4, r2*(e3-e5), ...".
/// Throws ParseError on bad syntax, DomainError on a degenerate frame.
Frame parse_frame(std::string_view text);

struct SU3Forms {
  KForm omega;      // eta^{12} + eta^{34} + eta^{56}
  KForm psi_plus;   // eta^{135} - eta^{146} - eta^{236} - eta^{245}
  KForm psi_minus;  // eta^{136} + eta^{145} + eta^{235} - eta^{246}
};

/// Real and imaginary parts of (eta^1 + i eta^2)(eta^3 + i eta^4)(eta^5 + i eta^6)
/// together with omega, all in e-coordinates. With these conventions
/// psi+ ^ psi- = 4 eta^{123456} = (2/3) omega^3.
SU3Forms forms_from_frame(const Frame& f);

struct HalfFlatCertificate {
  bool half_flat = false;
  KForm d_omega_wedge_omega;  // d(omega) ^ omega, a five-form
  KForm d_psi_plus;           // a four-form
};

/// dω ∧ ω = 0 and dψ+ = 0.
HalfFlatCertificate is_half_flat(const LieAlgebra& g, const SU3Forms& forms);

/// G[a][b] omega^3 = -3 (X_a ⌟ omega) ^ (X_b ⌟ psi+) ^ psi+, with X_a the
/// vectors dual to `vectors`. Identity iff that frame is orthonormal for the
/// metric of the structure.
Matrix gram_matrix(const SU3Forms& forms, const Frame& vectors);
/// The Gram matrix of a frame against its own structure.
Matrix gram_from_forms(const Frame& f);

/// J on covectors, frame-wise: J eta^{2k-1} = eta^{2k}, J eta^{2k} = -eta^{2k-1}.
KForm apply_j(const Frame& f, const KForm& a);

/// a ^ Ja ^ omega^2 != 0. Throws std::invalid_argument on the zero form or a
/// form that is not a one-form.
bool nondegeneracy(const Frame& f, const KForm& a);

}  // namespace halfflat
