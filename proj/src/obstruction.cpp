#include "halfflat/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfflat {

namespace {

KForm e(int n, std::initializer_list<int> indices) { return KForm::basis(n, IndexSet::of(indices)); }

// Kernel of alpha -> (alpha ^ x for x in partners) on all two-forms.
Subspace pairing_kernel(int n, const std::vector<KForm>& partners) {
  std::vector<Vector> images;
  for (IndexSet set : canonical_basis(n, 2)) {
    const KForm alpha = KForm::basis(n, set);
    std::vector<Vector> parts;
    for (const auto& x : partners) parts.push_back(wedge(alpha, x).to_vector());
    images.push_back(concat(parts));
  }
  return kernel(n, 2, images);
}

// Vectors v with alpha(v) = 0 for every alpha in v1.
std::vector<Vector> annihilator(const Subspace& v1) {
  const auto n = static_cast<std::size_t>(v1.generators());
  if (v1.is_zero()) {
    std::vector<Vector> out;
    const Matrix id = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(id.column(i));
    return out;
  }
  return nullspace(v1.rref());
}

bool fast_h03_zero(const LieAlgebra& g, const CoherentSplitting& s, bool prop2_applies) {
  if (prop2_applies) return prop2_h03(g, s) == 0;
  return hpq(g, s).at(0, 3) == 0;
}

}  // namespace

bool theorem1_obstructed(const LieAlgebra& g, const CoherentSplitting& s) {
  if (g.dim() != 6 || s.rank() != 2) throw DomainError("Theorem 1 concerns rank-2 splittings of six-dimensional algebras");
  const HpqTable t = hpq(g, s);
  return t.at(0, 3) == 0 && t.at(0, 4) == 0;
}

bool trilinear_vanishing(const LieAlgebra& g, const Subspace& v1) {
  return trilinear_vanishing(g, v1, annihilator(v1));
}

bool trilinear_vanishing(const LieAlgebra& g, const Subspace& v1, const std::vector<Vector>& directions) {
  const std::vector<KForm> z3 = closed_forms(g, 3).basis();
  for (const auto& alpha : v1.basis())
    for (const auto& v : directions)
      for (const auto& psi : z3) {
        const KForm left = wedge(alpha, contract(v, psi));
        if (left.is_zero()) continue;
        for (const auto& phi : z3)
          if (!wedge(left, phi).is_zero()) return false;
      }
  return true;
}

Lemma4Certificate lemma4_verify(const LieAlgebra& g) {
  if (g.dim() != 6) throw CertificateRefused('a', "the argument is specific to six-dimensional algebras");
  if (!check_jacobi(g)) throw CertificateRefused('a', "Jacobi identity fails");
  if (!is_nilpotent(g)) throw CertificateRefused('a', "algebra is not nilpotent");
  Lemma4Certificate cert;
  const auto dl = derived_length(g);
  cert.derived_length = dl.value_or(0);
  if (!dl || *dl <= 2)
    throw CertificateRefused('a', "derived length " + std::to_string(cert.derived_length) + " does not exclude coherent splittings");
  cert.generator_space_dim = generator_space(g).dim();
  if (cert.generator_space_dim != 0) throw CertificateRefused('a', "generator space is nonzero");

  const int n = 6;
  cert.z4_basis = closed_forms(g, 4).basis();
  for (const auto& sigma : cert.z4_basis)
    if (!wedge(sigma, e(n, {1, 2})).is_zero() || !wedge(sigma, e(n, {1, 3})).is_zero())
      throw CertificateRefused('b', "closed four-form " + sigma.to_string() + " pairs nontrivially with e^{12} or e^{13}");

  for (auto idx : {IndexSet::of({1, 2, 3}), IndexSet::of({1, 2, 4}), IndexSet::of({1, 2, 5}), IndexSet::of({1, 3, 4}),
                   IndexSet::of({1, 3, 5})}) {
    const KForm form = KForm::basis(n, idx);
    auto p = primitive(g, form);
    if (!p) throw CertificateRefused('c', form.to_string() + " is not exact");
    cert.exact_forms.push_back(form);
    cert.primitives.push_back(std::move(*p));
  }

  const Matrix id = Matrix::identity(n);
  cert.trilinear_vanishes = trilinear_vanishing(g, span({KForm::generator(n, 1)}), {id.column(3), id.column(4), id.column(5)});
  if (!cert.trilinear_vanishes) throw CertificateRefused('d', "trilinear map for <e^1> does not vanish on e_4, e_5, e_6");
  return cert;
}

Subspace cond1_kernel(const LieAlgebra& g) { return pairing_kernel(g.dim(), exact_forms(g, 2).basis()); }
Subspace cond2_kernel(const LieAlgebra& g) { return pairing_kernel(g.dim(), closed_forms(g, 3).basis()); }
bool corollary_cond1(const LieAlgebra& g) { return !cond1_kernel(g).is_zero(); }
bool corollary_cond2(const LieAlgebra& g) { return cond2_kernel(g).is_zero(); }

std::vector<KForm> witness_generators(const LieAlgebra& g) {
  const Subspace space = generator_space(g);
  const std::vector<KForm> basis = space.basis();
  std::vector<KForm> out;
  auto consider = [&out](const KForm& a) {
    if (a.is_zero() || !is_simple(a)) return;
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  };
  for (const auto& b : basis) consider(b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      consider(basis[i] + basis[j]);
      consider(basis[i] - basis[j]);
    }
  for (IndexSet set : canonical_basis(g.dim(), 2)) {
    const KForm a = KForm::basis(g.dim(), set);
    if (space.contains(a)) consider(a);
  }
  return out;
}

std::string to_string(Status s) { return s == Status::HalfFlat ? "half_flat" : "obstructed"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::Theorem1:
      return "theorem1";
    case Reason::Lemma4:
      return "lemma4";
    case Reason::CorollaryCond1Failed:
      return "corollary_cond1_failed";
    case Reason::CorollaryCond2Failed:
      return "corollary_cond2_failed";
    case Reason::CorollaryConditionsHold:
      return "corollary_conditions_hold";
  }
  return "unknown";
}

namespace {

// Theorem 1 witness among the given generators (confirmed by a full hpq run).
// `simple_found` and `all_h03_nonzero` feed the Theorem 2 cross-check.
struct WitnessScan {
  std::optional<KForm> generator;
  std::optional<HpqTable> table;
  bool any_splitting = false;
  bool all_h03_nonzero = true;
};

WitnessScan scan(const LieAlgebra& g, const std::vector<KForm>& generators, bool prop2_applies) {
  WitnessScan out;
  for (const auto& alpha : generators) {
    std::optional<CoherentSplitting> s;
    try {
      s.emplace(splitting_from_generator(g, alpha));
    } catch (const IncoherentSplitting&) {
      continue;
    }
    out.any_splitting = true;
    if (!fast_h03_zero(g, *s, prop2_applies)) continue;
    out.all_h03_nonzero = false;
    if (out.generator) continue;
    HpqTable t = hpq(g, *s);
    if (t.at(0, 3) == 0 && t.at(0, 4) == 0) {
      out.generator = alpha;
      out.table = std::move(t);
    }
  }
  return out;
}

}  // namespace

std::optional<Verdict> classify(const LieAlgebra& g, const std::optional<Frame>& frame_hint) {
  if (!check_jacobi(g)) throw DomainError("classify requires the Jacobi identity");
  Verdict v;
  v.algebra = format_notation(g);
  std::optional<Frame> verified;
  if (frame_hint && g.dim() == 6 && is_half_flat(g, forms_from_frame(*frame_hint)).half_flat) verified = frame_hint;

  if (g.dim() != 6) return std::nullopt;

  if (!is_nilpotent(g)) {
    std::vector<KForm> planes;
    for (IndexSet set : canonical_basis(6, 2)) planes.push_back(KForm::basis(6, set));
    WitnessScan w = scan(g, planes, false);
    if (!w.generator) return std::nullopt;
    if (verified) throw std::logic_error("half-flat frame verified on an algebra with a Theorem 1 obstruction");
    v.status = Status::Obstructed;
    v.reason = Reason::Theorem1;
    v.witness_generator = w.generator;
    v.witness_table = w.table;
    v.cond1 = corollary_cond1(g);
    v.cond2 = corollary_cond2(g);
    v.theorem2_consistent = true;
    return v;
  }

  v.cond1 = corollary_cond1(g);
  v.cond2 = corollary_cond2(g);
  const bool prop2_applies = is_unimodular(g);
  const WitnessScan w = scan(g, witness_generators(g), prop2_applies);
  const bool theorem2 = w.any_splitting && w.all_h03_nonzero;

  if (v.cond1 && v.cond2) {
    if (w.generator) throw std::logic_error("corollary conditions hold but a Theorem 1 obstruction was found");
    v.status = Status::HalfFlat;
    v.reason = Reason::CorollaryConditionsHold;
    v.witness_frame = verified;
  } else {
    if (verified) throw std::logic_error("half-flat frame verified on an algebra failing the corollary conditions");
    v.status = Status::Obstructed;
    if (w.generator) {
      v.reason = Reason::Theorem1;
      v.witness_generator = w.generator;
      v.witness_table = w.table;
    } else if (!w.any_splitting) {
      try {
        v.lemma4 = lemma4_verify(g);
        v.reason = Reason::Lemma4;
      } catch (const CertificateRefused&) {
        v.reason = v.cond1 ? Reason::CorollaryCond2Failed : Reason::CorollaryCond1Failed;
      }
    } else {
      v.reason = v.cond1 ? Reason::CorollaryCond2Failed : Reason::CorollaryCond1Failed;
    }
  }
  v.theorem2_consistent = theorem2 == (v.status == Status::HalfFlat);
  return v;
}

}  // namespace halfflat
