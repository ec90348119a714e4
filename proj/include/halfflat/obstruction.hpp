#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halfflat/errors.hpp"
#include "halfflat/lie_algebra.hpp"
#include "halfflat/splitting.hpp"
#include "halfflat/su3.hpp"

namespace halfflat {

/// h^{0,3} = 0 = h^{0,4} for a rank-2 splitting of a six-dimensional algebra
/// (DomainError for other shapes). True rules out half-flat structures.
bool theorem1_obstructed(const LieAlgebra& g, const CoherentSplitting& s);

/// alpha ^ (v ⌟ psi) ^ phi = 0 for alpha in a basis of v1, psi and phi in a
/// basis of Z^3, and v over `directions` (vectors in e-coordinates). Without
/// directions, v ranges over a basis of the annihilator of v1.
bool trilinear_vanishing(const LieAlgebra& g, const Subspace& v1);
bool trilinear_vanishing(const LieAlgebra& g, const Subspace& v1, const std::vector<Vector>& directions);

/// Data of the sporadic non-existence argument.
struct Lemma4Certificate {
  int derived_length = 0;
  int generator_space_dim = 0;
  std::vector<KForm> z4_basis;             // each wedges to zero with e^{12} and e^{13}
  std::vector<KForm> exact_forms;          // e^{123}, e^{124}, e^{125}, e^{134}, e^{135}
  std::vector<KForm> primitives;           // d(primitives[i]) = exact_forms[i]
  bool trilinear_vanishes = false;         // v1 = <e^1> against e_4, e_5, e_6
};

/// Thrown by lemma4_verify; clause() is 'a'..'d'.
class CertificateRefused : public DomainError {
 public:
  CertificateRefused(char clause, const std::string& message)
      : DomainError(std::string("clause (") + clause + "): " + message), clause_(clause) {}
  char clause() const { return clause_; }

 private:
  char clause_;
};

/// (a) nilpotent of derived length > 2, so no coherent splitting; (b)
/// sigma ^ e^{12} = 0 = sigma ^ e^{13} on Z^4; (c) the five three-forms above
/// are exact; (d) trilinear vanishing for <e^1> in directions e_4, e_5, e_6.
/// Six-dimensional algebras only.
Lemma4Certificate lemma4_verify(const LieAlgebra& g);

/// Kernel of alpha -> (alpha ^ beta) over beta in B^2; cond1 is "nonzero".
Subspace cond1_kernel(const LieAlgebra& g);
/// Kernel of alpha -> (alpha ^ psi) over psi in Z^3; cond2 is "zero".
Subspace cond2_kernel(const LieAlgebra& g);
bool corollary_cond1(const LieAlgebra& g);
bool corollary_cond2(const LieAlgebra& g);

/// Generators tried for Theorem 1 witnesses and the Theorem 2 cross-check:
/// simple RREF basis vectors of generator_space, simple pairwise sums and
/// differences, and the simple e^{ij} lying in the space. Nilpotent only.
std::vector<KForm> witness_generators(const LieAlgebra& g);

enum class Status { HalfFlat, Obstructed };
enum class Reason { Theorem1, Lemma4, CorollaryCond1Failed, CorollaryCond2Failed, CorollaryConditionsHold };

std::string to_string(Status s);
std::string to_string(Reason r);

struct Verdict {
  std::string algebra;  // canonical notation
  Status status = Status::Obstructed;
  Reason reason = Reason::CorollaryCond2Failed;
  bool cond1 = false;
  bool cond2 = false;
  std::optional<Frame> witness_frame;         // half-flat frame, re-verified
  std::optional<KForm> witness_generator;     // Theorem 1 splitting generator
  std::optional<HpqTable> witness_table;      // hpq of that splitting
  std::optional<Lemma4Certificate> lemma4;
  /// The Theorem 2 formulation evaluated on witness_generators agrees with status.
  bool theorem2_consistent = false;
};

/// Decision procedure. For six-dimensional nilpotent algebras the status is
/// cond1 && cond2, with certificates attached. `frame_hint` (a known
/// half-flat frame) is re-verified and attached when it passes. Other
/// algebras only get an Obstructed verdict from a Theorem 1 witness among the
/// coordinate planes <e^i, e^j>; otherwise the result is std::nullopt
/// (undecided). Throws std::logic_error if a verified frame and an obstruction
/// certificate coexist, DomainError when Jacobi fails.
std::optional<Verdict> classify(const LieAlgebra& g, const std::optional<Frame>& frame_hint = std::nullopt);

}  // namespace halfflat
