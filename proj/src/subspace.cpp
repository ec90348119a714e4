#include "halfflat/subspace.hpp"

#include <stdexcept>

namespace halfflat {

Subspace::Subspace(int n, int degree) : n_(n), degree_(degree), rows_(0, static_cast<std::size_t>(binomial(n, degree))) {
  if (n < 0 || n > kMaxDim || degree < 0) throw std::out_of_range("bad ambient for subspace");
}

Subspace Subspace::from_vectors(int n, int degree, const std::vector<Vector>& vectors) {
  Subspace out(n, degree);
  const auto width = static_cast<std::size_t>(out.ambient_dim());
  if (vectors.empty()) return out;
  Echelon e = row_reduce(Matrix::from_rows(vectors, width));
  out.rows_ = std::move(e.reduced);
  out.pivots_ = std::move(e.pivots);
  return out;
}

Subspace Subspace::whole(int n, int degree) {
  const auto size = static_cast<std::size_t>(binomial(n, degree));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < size; ++i) {
    Vector v(size);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return from_vectors(n, degree, rows);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < rows_.rows(); ++r) out.push_back(rows_.row(r));
  return out;
}

std::vector<KForm> Subspace::basis() const {
  std::vector<KForm> out;
  for (const auto& v : basis_vectors()) out.push_back(KForm::from_vector(n_, degree_, v));
  return out;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != static_cast<std::size_t>(ambient_dim())) throw std::invalid_argument("vector outside the ambient space");
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar factor = v[pivots_[r]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!rows_.at(r, c).is_zero()) v[c] -= factor * rows_.at(r, c);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& s : reduce(v))
    if (!s.is_zero()) return false;
  return true;
}

bool Subspace::contains(const KForm& a) const {
  if (a.dim() != n_ || a.degree() != degree_) throw std::invalid_argument("form of the wrong type for this subspace");
  return contains(a.to_vector());
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace span(int n, int degree, const std::vector<KForm>& forms) {
  std::vector<Vector> vectors;
  for (const auto& f : forms) {
    if (f.dim() != n || f.degree() != degree) throw std::invalid_argument("span of forms with inconsistent degrees");
    vectors.push_back(f.to_vector());
  }
  return Subspace::from_vectors(n, degree, vectors);
}

Subspace span(const std::vector<KForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("span of an empty list needs an explicit ambient");
  return span(forms.front().dim(), forms.front().degree(), forms);
}

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.generators() != b.generators() || a.degree() != b.degree())
    throw std::invalid_argument("subspaces live in different ambients");
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  auto vectors = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vectors.push_back(std::move(v));
  return Subspace::from_vectors(a.generators(), a.degree(), vectors);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace(a.generators(), a.degree());
  // Solve sum x_i a_i - sum y_j b_j = 0 and map back through the a-coefficients.
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  std::vector<Vector> columns = av;
  for (const auto& v : bv) {
    Vector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    columns.push_back(std::move(neg));
  }
  const auto width = static_cast<std::size_t>(a.ambient_dim());
  std::vector<Vector> members;
  for (const auto& sol : nullspace(Matrix::from_columns(columns, width))) {
    Vector v(width);
    for (std::size_t i = 0; i < av.size(); ++i)
      if (!sol[i].is_zero())
        for (std::size_t c = 0; c < width; ++c) v[c] += sol[i] * av[i][c];
    members.push_back(std::move(v));
  }
  return Subspace::from_vectors(a.generators(), a.degree(), members);
}

Vector concat(const std::vector<Vector>& parts) {
  Vector out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Subspace kernel_on(int n, int degree, const std::vector<KForm>& domain, const std::vector<Vector>& images) {
  if (domain.size() != images.size()) throw std::invalid_argument("one image per domain element required");
  if (domain.empty()) return Subspace(n, degree);
  const std::size_t height = images.front().size();
  for (const auto& img : images)
    if (img.size() != height) throw std::invalid_argument("images of inconsistent length");
  for (const auto& d : domain)
    if (d.dim() != n || d.degree() != degree) throw std::invalid_argument("domain forms of inconsistent degree");
  std::vector<KForm> members;
  if (height == 0) {
    members = domain;
  } else {
    for (const auto& sol : nullspace(Matrix::from_columns(images, height))) {
      KForm x(n, degree);
      for (std::size_t i = 0; i < domain.size(); ++i)
        if (!sol[i].is_zero()) x += sol[i] * domain[i];
      members.push_back(std::move(x));
    }
  }
  return span(n, degree, members);
}

Subspace kernel(int n, int degree, const std::vector<Vector>& images) {
  std::vector<KForm> domain;
  for (IndexSet s : canonical_basis(n, degree)) domain.push_back(KForm::basis(n, s));
  return kernel_on(n, degree, domain, images);
}

Subspace kernel(int n, int degree, const std::vector<KForm>& images) {
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0 && (images[i].degree() != images[0].degree() || images[i].dim() != images[0].dim()))
      throw std::invalid_argument("images of inconsistent degree");
    vectors.push_back(images[i].to_vector());
  }
  return kernel(n, degree, vectors);
}

Subspace preimage(const Subspace& domain, const std::vector<KForm>& images, const Subspace& target) {
  const int n = domain.generators();
  const int k = domain.degree();
  if (images.size() != static_cast<std::size_t>(domain.ambient_dim()))
    throw std::invalid_argument("map must be given on the canonical basis");
  // Image of each domain basis vector, reduced modulo the target.
  std::vector<KForm> basis = domain.basis();
  std::vector<Vector> reduced;
  for (const auto& x : basis) {
    KForm img;
    bool first = true;
    for (const auto& [set, coeff] : x.terms()) {
      KForm term = coeff * images[static_cast<std::size_t>(basis_position(n, set))];
      if (first) {
        img = std::move(term);
        first = false;
      } else {
        img += term;
      }
    }
    if (first) img = KForm(target.generators(), target.degree());
    reduced.push_back(target.reduce(img.to_vector()));
  }
  return kernel_on(n, k, basis, reduced);
}

}  // namespace halfflat
