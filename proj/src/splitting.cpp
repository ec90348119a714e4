#include "halfflat/splitting.hpp"

#include <map>
#include <stdexcept>

namespace halfflat {

namespace {

KForm wedge_all(const std::vector<KForm>& forms, int n) {
  KForm out = KForm::constant(n, 1);
  for (const auto& f : forms) out = wedge(out, f);
  return out;
}

// Complement spanned by the canonical covectors that are not pivots of v1.
Subspace default_complement(const Subspace& v1) {
  const int n = v1.generators();
  std::vector<bool> pivot(static_cast<std::size_t>(n), false);
  for (auto c : v1.pivots()) pivot[c] = true;
  std::vector<KForm> forms;
  for (int j = 1; j <= n; ++j)
    if (!pivot[static_cast<std::size_t>(j - 1)]) forms.push_back(KForm::generator(n, j));
  return span(n, 1, forms);
}

// Coherence on generators of the adapted algebra: d f^a in L^{2,0} for
// a <= r, and no L^{0,2} component for a > r.
bool adapted_is_coherent(const LieAlgebra& adapted, int r) {
  for (int a = 1; a <= adapted.dim(); ++a) {
    for (const auto& [set, c] : adapted.d_generator(a).terms()) {
      const int p = set.count_below(r + 1);
      if (a <= r && p != 2) return false;
      if (a > r && p == 0) return false;
    }
  }
  return true;
}

void require_same(const LieAlgebra& g, const CoherentSplitting& s) {
  if (!(g == s.algebra())) throw std::invalid_argument("splitting belongs to a different algebra");
}

// The part of d(x) that raises p by `shift`, computed term by term.
KForm delta(const CoherentSplitting& s, const KForm& x, int shift) {
  const LieAlgebra& a = s.adapted();
  const int n = a.dim();
  const int k = x.degree();
  KForm out(n, k + 1);
  if (k >= n) return out;
  const auto& images = a.d_on_basis(k);
  for (const auto& [set, c] : x.terms()) {
    const int target = s.p_of(set) + shift;
    for (const auto& [img, coeff] : images[static_cast<std::size_t>(basis_position(n, set))].terms())
      if (s.p_of(img) == target) out.add_term(img, c * coeff);
  }
  return out;
}

std::vector<KForm> bidegree_forms(const CoherentSplitting& s, int p, int q) {
  std::vector<KForm> out;
  for (IndexSet set : s.bidegree_basis(p, q)) out.push_back(KForm::basis(s.dim(), set));
  return out;
}

bool in_range(const CoherentSplitting& s, int p, int q) {
  return p >= 0 && q >= 0 && p <= s.rank() && q <= s.dim() - s.rank();
}

// ker(delta1) on L^{p,q}.
Subspace delta1_kernel(const CoherentSplitting& s, int p, int q) {
  const int n = s.dim();
  const int k = p + q;
  if (!in_range(s, p, q)) return Subspace(n, k < 0 ? 0 : k);
  std::vector<KForm> domain = bidegree_forms(s, p, q);
  std::vector<Vector> images;
  for (const auto& x : domain) images.push_back(delta(s, x, 1).to_vector());
  return kernel_on(n, k, domain, images);
}

// delta1(L^{p-1,q}), a subspace of L^{p,q}.
Subspace delta1_image(const CoherentSplitting& s, int p, int q) {
  const int n = s.dim();
  const int k = p + q;
  std::vector<KForm> images;
  if (in_range(s, p - 1, q))
    for (const auto& x : bidegree_forms(s, p - 1, q)) images.push_back(delta(s, x, 1));
  return span(n, k < 0 ? 0 : k, images);
}

std::vector<std::vector<int>> grid(int r, int n) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(r + 1),
                                       std::vector<int>(static_cast<std::size_t>(n - r + 1), 0));
}

}  // namespace

CoherentSplitting::CoherentSplitting(LieAlgebra g, Subspace v1, Subspace v2, KForm generator, Coframe frame,
                                     LieAlgebra adapted)
    : algebra_(std::move(g)),
      v1_(std::move(v1)),
      v2_(std::move(v2)),
      generator_(std::move(generator)),
      coframe_(std::move(frame)),
      adapted_(std::move(adapted)) {}

std::vector<IndexSet> CoherentSplitting::bidegree_basis(int p, int q) const {
  std::vector<IndexSet> out;
  if (p < 0 || q < 0 || p + q > dim()) return out;
  for (IndexSet set : canonical_basis(dim(), p + q))
    if (p_of(set) == p) out.push_back(set);
  return out;
}

bool is_coherent(const LieAlgebra& g, const Subspace& v1) {
  if (v1.degree() != 1 || v1.generators() != g.dim() || v1.is_zero())
    throw std::invalid_argument("V1 must be a nonzero subspace of one-forms");
  std::vector<KForm> frame = v1.basis();
  for (const auto& f : default_complement(v1).basis()) frame.push_back(f);
  return adapted_is_coherent(change_coframe(g, frame), v1.dim());
}

CoherentSplitting make_splitting(const LieAlgebra& g, const Subspace& v1, std::optional<Subspace> v2,
                                 std::optional<KForm> generator) {
  const int n = g.dim();
  if (v1.degree() != 1 || v1.generators() != n || v1.is_zero())
    throw std::invalid_argument("V1 must be a nonzero subspace of one-forms");
  if (!check_jacobi(g)) throw DomainError("splitting requires the Jacobi identity");
  Subspace complement = v2 ? *v2 : default_complement(v1);
  if (complement.degree() != 1 || complement.generators() != n || v1.dim() + complement.dim() != n ||
      !sum(v1, complement).is_whole())
    throw std::invalid_argument("V1 and V2 do not span the dual space");
  std::vector<KForm> frame = v1.basis();
  for (const auto& f : complement.basis()) frame.push_back(f);
  LieAlgebra adapted = change_coframe(g, frame);
  if (!adapted_is_coherent(adapted, v1.dim()))
    throw IncoherentSplitting("splitting is not coherent: d(L^{p,q}) leaves L^{p+1,q} + L^{p+2,q-1}");
  KForm gen = generator ? *generator : wedge_all(v1.basis(), n);
  return CoherentSplitting(g, v1, std::move(complement), std::move(gen), Coframe(frame), std::move(adapted));
}

Subspace generator_space(const LieAlgebra& g) {
  if (!check_jacobi(g)) throw DomainError("generator space requires the Jacobi identity");
  if (!is_nilpotent(g)) throw DomainError("generator space is defined for nilpotent algebras; check coherence of V1 directly");
  const int n = g.dim();
  const std::vector<KForm> closed = kernel_d(g).basis();
  std::vector<KForm> domain;
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = i + 1; j < closed.size(); ++j) domain.push_back(wedge(closed[i], closed[j]));
  std::vector<Vector> images;
  for (const auto& alpha : domain) {
    std::vector<Vector> parts;
    for (const auto& de : g.d1()) parts.push_back(wedge(alpha, de).to_vector());
    images.push_back(concat(parts));
  }
  return kernel_on(n, 2, domain, images);
}

CoherentSplitting splitting_from_generator(const LieAlgebra& g, const KForm& alpha) {
  if (alpha.degree() != 2 || alpha.dim() != g.dim()) throw std::invalid_argument("generator must be a two-form on the algebra");
  if (alpha.is_zero()) throw std::invalid_argument("generator must be nonzero");
  auto factors = factor_simple(alpha);
  if (!factors) throw std::invalid_argument("generator " + alpha.to_string() + " is not simple");
  return make_splitting(g, span({factors->first, factors->second}), std::nullopt, alpha);
}

SplitDifferential::SplitDifferential(const CoherentSplitting& s) : r_(s.rank()), s_(s.dim() - s.rank()) {
  const int n = s.dim();
  std::map<IndexSet, std::size_t> position;
  for (int p = 0; p <= r_; ++p)
    for (int q = 0; q <= s_; ++q) {
      const auto basis = s.bidegree_basis(p, q);
      for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i;
    }
  for (int p = 0; p <= r_; ++p)
    for (int q = 0; q <= s_; ++q) {
      const auto source = s.bidegree_basis(p, q);
      Matrix d1(s.bidegree_basis(p + 1, q).size(), source.size());
      Matrix d2(s.bidegree_basis(p + 2, q - 1).size(), source.size());
      const int k = p + q;
      for (std::size_t j = 0; j < source.size() && k < n; ++j) {
        const KForm& img = s.adapted().d_on_basis(k)[static_cast<std::size_t>(basis_position(n, source[j]))];
        for (const auto& [set, c] : img.terms()) {
          const int target = s.p_of(set);
          if (target == p + 1) {
            d1.at(position.at(set), j) = c;
          } else if (target == p + 2) {
            d2.at(position.at(set), j) = c;
          } else {
            throw IncoherentSplitting("differential has a component outside L^{p+1,q} + L^{p+2,q-1}");
          }
        }
      }
      delta1_.push_back(std::move(d1));
      delta2_.push_back(std::move(d2));
    }
}

std::size_t SplitDifferential::slot(int p, int q) const {
  return static_cast<std::size_t>(p * (s_ + 1) + q);
}

std::size_t SplitDifferential::size(int p, int q) const {
  if (p < 0 || q < 0 || p > r_ || q > s_) return 0;
  return static_cast<std::size_t>(binomial(r_, p) * binomial(s_, q));
}

Matrix SplitDifferential::delta1(int p, int q) const {
  if (size(p, q) == 0) return Matrix(size(p + 1, q), 0);
  return delta1_[slot(p, q)];
}

Matrix SplitDifferential::delta2(int p, int q) const {
  if (size(p, q) == 0) return Matrix(size(p + 2, q - 1), 0);
  return delta2_[slot(p, q)];
}

SplitDifferential split_d(const LieAlgebra& g, const CoherentSplitting& s) {
  require_same(g, s);
  return SplitDifferential(s);
}

int HpqTable::at(int p, int q) const {
  if (p < 0 || q < 0 || p > rank || q > dim - rank) return 0;
  return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

bool HpqTable::satisfies_duality() const {
  for (int p = 0; p <= rank; ++p)
    for (int q = 0; q <= dim - rank; ++q)
      if (at(p, q) != at(rank - p, dim - rank - q)) return false;
  return true;
}

bool HpqTable::sums_to_betti() const {
  for (int k = 0; k <= dim; ++k) {
    int total = 0;
    for (int p = 0; p <= k; ++p) total += at(p, k - p);
    if (total != betti[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

// Rank of the subspace projected onto the given coordinates.
int projected_rank(const Subspace& v, const std::vector<std::size_t>& coords) {
  if (v.is_zero() || coords.empty()) return 0;
  const Matrix& rows = v.rref();
  Matrix m(rows.rows(), coords.size());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) m.at(i, j) = rows.at(i, coords[j]);
  return static_cast<int>(rank(m));
}

HpqTable hpq(const LieAlgebra& g, const CoherentSplitting& s) {
  require_same(g, s);
  const int n = s.dim();
  const int r = s.rank();
  const CohomologySummary c = cohomology(s.adapted());
  HpqTable t;
  t.rank = r;
  t.dim = n;
  t.betti = c.betti;
  t.h = grid(r, n);
  for (int k = 0; k <= n; ++k) {
    const Subspace& z = c.closed[static_cast<std::size_t>(k)];
    const Subspace& b = c.exact[static_cast<std::size_t>(k)];
    // F_p is a coordinate subspace in the adapted coframe, so Z ∩ F_p is cut
    // out by the coordinates below level p. B ⊆ Z gives Z_p ∩ B = B ∩ F_p.
    std::vector<int> zd, hd;
    for (int p = 0; p <= r + 1; ++p) {
      std::vector<std::size_t> outside;
      for (IndexSet set : canonical_basis(n, k))
        if (s.p_of(set) < p) outside.push_back(static_cast<std::size_t>(basis_position(n, set)));
      const int zp = z.dim() - projected_rank(z, outside);
      const int bp = b.dim() - projected_rank(b, outside);
      zd.push_back(zp);
      hd.push_back(zp - bp);
    }
    for (int p = 0; p <= r; ++p) {
      const int q = k - p;
      if (q < 0 || q > n - r) continue;
      t.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          hd[static_cast<std::size_t>(p)] - hd[static_cast<std::size_t>(p + 1)];
    }
    t.z_dims.push_back(std::move(zd));
    t.h_dims.push_back(std::move(hd));
  }
  return t;
}

int E1Table::e1_at(int p, int q) const {
  if (p < 0 || q < 0 || p > rank || q > dim - rank) return 0;
  return e1[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

int E1Table::e2_at(int p, int q) const {
  if (p < 0 || q < 0 || p > rank || q > dim - rank) return 0;
  return e2[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

namespace {

// `known` is the h^{p,q} table of s when the caller already has it.
E1Table e1_term_impl(const LieAlgebra& g, const CoherentSplitting& s, const HpqTable* known) {
  const int n = s.dim();
  const int r = s.rank();
  E1Table t;
  t.rank = r;
  t.dim = n;
  t.e1 = grid(r, n);
  t.e2 = grid(r, n);
  for (int p = 0; p <= r; ++p) {
    for (int q = 0; q <= n - r; ++q) {
      const int k = p + q;
      const Subspace ker1 = delta1_kernel(s, p, q);
      const Subspace im1 = delta1_image(s, p, q);
      const auto pi = static_cast<std::size_t>(p);
      const auto qi = static_cast<std::size_t>(q);
      t.e1[pi][qi] = ker1.dim() - im1.dim();

      // Classes whose delta2 image is delta1-exact.
      const Subspace target = delta1_image(s, p + 2, q - 1);
      const std::vector<KForm> cycles = ker1.basis();
      std::vector<Vector> residues;
      for (const auto& x : cycles) {
        KForm y = delta(s, x, 2);
        residues.push_back(target.degree() == y.degree() ? target.reduce(y.to_vector()) : y.to_vector());
      }
      const int kernel_dim = kernel_on(n, k, cycles, residues).dim() - im1.dim();

      int image_dim = 0;
      if (in_range(s, p - 2, q + 1)) {
        std::vector<KForm> images;
        for (const auto& x : delta1_kernel(s, p - 2, q + 1).basis()) images.push_back(delta(s, x, 2));
        image_dim = sum(span(n, k, images), im1).dim() - im1.dim();
      }
      t.e2[pi][qi] = kernel_dim - image_dim;
    }
  }
  if (r <= n - 2 && 2 <= n) {
    std::vector<KForm> back;
    for (const auto& x : delta1_kernel(s, 0, 2).basis()) back.push_back(s.coframe().from_frame(x));
    t.e1_02 = span(n, 2, back);
  } else {
    t.e1_02 = Subspace(n, 2);
  }
  if (r == 2) {
    const HpqTable h = known ? *known : hpq(g, s);
    if (h.h != t.e2) throw std::logic_error("spectral sequence does not collapse at E_2");
  }
  return t;
}

}  // namespace

E1Table e1_term(const LieAlgebra& g, const CoherentSplitting& s) {
  require_same(g, s);
  return e1_term_impl(g, s, nullptr);
}

namespace {

void require_prop2(const LieAlgebra& g, const CoherentSplitting& s) {
  require_same(g, s);
  if (g.dim() != 6 || s.rank() != 2) throw DomainError("closed formulas need a six-dimensional algebra and dim V1 = 2");
  if (!is_unimodular(g)) throw DomainError("closed formulas need a unimodular algebra; use hpq()");
}

}  // namespace

int prop2_h03(const LieAlgebra& g, const CoherentSplitting& s) {
  require_prop2(g, s);
  const CohomologySummary c = cohomology(g);
  return 1 - c.betti[1] + c.betti[2] - delta1_kernel(s, 0, 2).dim();
}

bool prop2_h04_zero(const LieAlgebra& g, const CoherentSplitting& s) {
  require_prop2(g, s);
  return exact_forms(g, 2).contains(s.generator());
}

std::vector<std::string> check_proposition2(const LieAlgebra& g, const CoherentSplitting& s) {
  require_same(g, s);
  std::vector<std::string> out;
  if (g.dim() != 6 || s.rank() != 2) {
    out.push_back("not a rank-2 splitting of a six-dimensional algebra");
    return out;
  }
  const HpqTable h = hpq(g, s);
  if (!h.sums_to_betti()) out.push_back("sum of h^{p,q} differs from b_k");
  E1Table e;
  try {
    e = e1_term_impl(g, s, &h);
  } catch (const std::logic_error& err) {
    out.push_back(err.what());
    return out;
  }
  const int euler_spaces = static_cast<int>(s.bidegree_basis(2, 2).size()) -
                           static_cast<int>(s.bidegree_basis(1, 2).size()) +
                           static_cast<int>(s.bidegree_basis(0, 2).size());
  if (e.e1_at(2, 2) - e.e1_at(1, 2) + e.e1_at(0, 2) != euler_spaces) out.push_back("E_1 Euler characteristic mismatch");
  if (is_nilpotent(g)) {
    if (!kernel_d(g).contains(s.v1())) out.push_back("V1 not contained in ker d for a nilpotent algebra");
    const auto dl = derived_length(g);
    if (!dl || *dl > 2) out.push_back("nilpotent algebra with a coherent splitting has derived length > 2");
  }
  if (!is_unimodular(g)) return out;
  if (!h.satisfies_duality()) out.push_back("h^{p,q} != h^{2-p,4-q}");
  if (prop2_h03(g, s) != h.at(0, 3)) out.push_back("closed formula for h^{0,3} disagrees with the filtration");
  if (prop2_h04_zero(g, s) != (h.at(0, 4) == 0)) out.push_back("h^{0,4} = 0 does not match exactness of the generator");
  if (h.at(1, 2) != 2 * e.e1_at(0, 2)) out.push_back("h^{1,2} != 2 dim E_1^{0,2}");
  return out;
}

CoherentSplitting canonical_splitting(const LieAlgebra& g) {
  if (!check_jacobi(g)) throw DomainError("canonical splitting requires the Jacobi identity");
  const auto dl = derived_length(g);
  if (!dl) throw DomainError("canonical splitting needs derived length <= 2; the algebra is not solvable");
  if (*dl > 2) throw DomainError("canonical splitting needs derived length <= 2; got " + std::to_string(*dl));
  return make_splitting(g, kernel_d(g));
}

HpqTable canonical_hpq(const LieAlgebra& g) {
  const CoherentSplitting s = canonical_splitting(g);
  return hpq(g, s);
}

}  // namespace halfflat
