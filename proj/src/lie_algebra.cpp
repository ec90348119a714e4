#include "halfflat/lie_algebra.hpp"

#include <stdexcept>

#include "halfflat/coframe.hpp"
#include "halfflat/errors.hpp"

namespace halfflat {

namespace {

// d(e^{i1..ik}) = sum_j (-1)^j e^{i1..i(j-1)} ^ de^{ij} ^ e^{i(j+1)..ik}
KForm d_of_basis(const std::vector<KForm>& d1, int n, IndexSet set) {
  KForm out(n, set.size() + 1);
  const auto indices = set.indices();
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const KForm& dj = d1[static_cast<std::size_t>(indices[j] - 1)];
    if (dj.is_zero()) continue;
    IndexSet before;
    IndexSet after;
    for (std::size_t m = 0; m < indices.size(); ++m) {
      if (m < j) before = before.with(indices[m]);
      if (m > j) after = after.with(indices[m]);
    }
    KForm term = wedge(wedge(KForm::basis(n, before), dj), KForm::basis(n, after));
    if (j % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

Subspace wedge_span(const Subspace& a, const Subspace& b, int n) {
  std::vector<KForm> products;
  const auto ab = a.basis();
  const auto bb = b.basis();
  for (const auto& x : ab)
    for (const auto& y : bb) products.push_back(wedge(x, y));
  return span(n, a.degree() + b.degree(), products);
}

// Ascending chain W_{i+1} = { x in g* : dx in next(W_i) }, stopping when it stabilises.
template <typename Next>
std::pair<Subspace, int> ascend(const LieAlgebra& g, Next next) {
  const int n = g.dim();
  Subspace w(n, 1);
  int steps = 0;
  while (true) {
    Subspace grown = preimage(Subspace::whole(n, 1), g.d_on_basis(1), next(w));
    if (grown == w) return {w, steps};
    w = std::move(grown);
    ++steps;
    if (w.is_whole()) return {w, steps};
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<KForm> d_generators, std::optional<std::string> source_notation)
    : d1_(std::move(d_generators)), source_(std::move(source_notation)) {
  const int n = dim();
  if (n < 2 || n > kMaxDim) throw DomainError("Lie algebra dimension must be in 2.." + std::to_string(kMaxDim));
  for (const auto& f : d1_)
    if (f.dim() != n || f.degree() != 2) throw DomainError("d of a generator must be a two-form on " + std::to_string(n) + " generators");
  d_basis_.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    for (IndexSet s : canonical_basis(n, k)) d_basis_[static_cast<std::size_t>(k)].push_back(d_of_basis(d1_, n, s));
}

std::vector<Vector> LieAlgebra::d_matrix_columns(int k) const {
  std::vector<Vector> out;
  for (const auto& f : d_on_basis(k)) out.push_back(f.to_vector());
  return out;
}

KForm differential(const LieAlgebra& g, const KForm& a) {
  if (a.dim() != g.dim()) throw std::invalid_argument("form and algebra have different dimensions");
  const int n = g.dim();
  KForm out(n, a.degree() + 1);
  if (a.degree() >= n) return out;
  const auto& images = g.d_on_basis(a.degree());
  for (const auto& [set, coeff] : a.terms()) out += coeff * images[static_cast<std::size_t>(basis_position(n, set))];
  return out;
}

bool check_jacobi(const LieAlgebra& g) {
  for (const auto& f : g.d1())
    if (!differential(g, f).is_zero()) return false;
  return true;
}

bool is_nilpotent(const LieAlgebra& g) {
  const int n = g.dim();
  auto [w, steps] = ascend(g, [n](const Subspace& w) { return wedge_span(w, w, n); });
  return w.is_whole();
}

std::optional<int> derived_length(const LieAlgebra& g) {
  const int n = g.dim();
  // A_m = annihilator of D^m(g); A_{m+1} = { x : dx in A_m ^ g* }.
  const Subspace all = Subspace::whole(n, 1);
  auto [a, steps] = ascend(g, [&](const Subspace& w) { return wedge_span(w, all, n); });
  if (!a.is_whole()) return std::nullopt;
  return steps;
}

bool is_unimodular_by_closed_forms(const LieAlgebra& g) {
  for (const auto& f : g.d_on_basis(g.dim() - 1))
    if (!f.is_zero()) return false;
  return true;
}

bool is_unimodular_by_top_betti(const LieAlgebra& g) {
  const int n = g.dim();
  // Z^n is everything (dim 1); b_n = 1 - dim B^n.
  return 1 - exact_forms(g, n).dim() == 1;
}

bool is_unimodular(const LieAlgebra& g) {
  const bool by_forms = is_unimodular_by_closed_forms(g);
  if (by_forms != is_unimodular_by_top_betti(g)) throw std::logic_error("unimodularity routes disagree");
  return by_forms;
}

Subspace closed_forms(const LieAlgebra& g, int k) {
  const int n = g.dim();
  if (k == n) return Subspace::whole(n, n);
  return kernel(n, k, g.d_matrix_columns(k));
}

Subspace exact_forms(const LieAlgebra& g, int k) {
  const int n = g.dim();
  if (k == 0) return Subspace(n, 0);
  return span(n, k, g.d_on_basis(k - 1));
}

Subspace kernel_d(const LieAlgebra& g) { return closed_forms(g, 1); }

std::optional<KForm> primitive(const LieAlgebra& g, const KForm& a) {
  const int n = g.dim();
  const int k = a.degree();
  if (k == 0) return a.is_zero() ? std::optional<KForm>(KForm(n, 0)) : std::nullopt;
  if (a.is_zero()) return KForm(n, k - 1);
  // Solve sum_j x_j d(basis_j) - t a = 0 with t = 1.
  std::vector<Vector> columns = g.d_matrix_columns(k - 1);
  Vector target = a.to_vector();
  for (auto& c : target) c = -c;
  columns.push_back(target);
  const auto height = static_cast<std::size_t>(binomial(n, k));
  for (const auto& sol : nullspace(Matrix::from_columns(columns, height))) {
    const Scalar& t = sol.back();
    if (t.is_zero()) continue;
    Vector x(sol.begin(), sol.end() - 1);
    const Scalar inv = t.inverse();
    for (auto& c : x) c *= inv;
    return KForm::from_vector(n, k - 1, x);
  }
  return std::nullopt;
}

CohomologySummary cohomology(const LieAlgebra& g) {
  if (!check_jacobi(g)) throw DomainError("cohomology requires the Jacobi identity (d^2 != 0)");
  const int n = g.dim();
  CohomologySummary out;
  for (int k = 0; k <= n; ++k) {
    out.closed.push_back(closed_forms(g, k));
    out.exact.push_back(exact_forms(g, k));
    out.betti.push_back(out.closed.back().dim() - out.exact.back().dim());
  }
  return out;
}

LieAlgebra change_coframe(const LieAlgebra& g, const std::vector<KForm>& frame) {
  const Coframe coframe(frame);
  if (coframe.dim() != g.dim()) throw DomainError("coframe size does not match the algebra");
  std::vector<KForm> d1;
  for (const auto& f : frame) d1.push_back(coframe.to_frame(differential(g, f)));
  return LieAlgebra(std::move(d1));
}

}  // namespace halfflat
