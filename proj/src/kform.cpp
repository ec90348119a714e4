#include "halfflat/kform.hpp"

#include <ostream>
#include <stdexcept>

namespace halfflat {

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw std::out_of_range("ambient dimension must be in 0.." + std::to_string(kMaxDim));
}

}  // namespace

KForm::KForm(int n, int degree) : dim_(n), degree_(degree) {
  check_dim(n);
  // Degrees above n are allowed and hold only the zero form.
  if (degree < 0) throw std::out_of_range("negative form degree");
}

KForm KForm::basis(int n, IndexSet set, Scalar coeff) {
  KForm out(n, set.size());
  out.add_term(set, coeff);
  return out;
}

KForm KForm::generator(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return basis(n, IndexSet::single(i));
}

KForm KForm::constant(int n, Scalar value) { return basis(n, IndexSet(), std::move(value)); }

KForm KForm::from_vector(int n, int degree, std::span<const Scalar> coeffs) {
  KForm out(n, degree);
  const auto& basis = canonical_basis(n, degree);
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) out.terms_.emplace(basis[i], coeffs[i]);
  return out;
}

Scalar KForm::coefficient(IndexSet set) const {
  auto it = terms_.find(set);
  return it == terms_.end() ? Scalar() : it->second;
}

void KForm::add_term(IndexSet set, const Scalar& coeff) {
  if (set.size() != degree_ || set.max_index() > dim_) throw std::invalid_argument("basis element does not fit the form");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(set, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vector KForm::to_vector() const {
  Vector out(static_cast<std::size_t>(binomial(dim_, degree_)));
  for (const auto& [set, coeff] : terms_) out[static_cast<std::size_t>(basis_position(dim_, set))] = coeff;
  return out;
}

KForm& KForm::operator+=(const KForm& other) {
  if (other.dim_ != dim_ || other.degree_ != degree_) throw std::invalid_argument("adding forms of different type");
  for (const auto& [set, coeff] : other.terms_) add_term(set, coeff);
  return *this;
}

KForm& KForm::operator-=(const KForm& other) { return *this += -other; }

KForm& KForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [set, coeff] : terms_) coeff *= s;
  return *this;
}

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [set, coeff] : out.terms_) coeff = -coeff;
  return out;
}

std::string KForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [set, coeff] : terms_) {
    std::string c = coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (set.empty()) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += "e^{" + set.digits() + "}";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const KForm& a) { return os << a.to_string(); }

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge of forms on different spaces");
  const int n = a.dim();
  if (a.degree() + b.degree() > n) return KForm(n, a.degree() + b.degree());
  KForm out(n, a.degree() + b.degree());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (sa.intersects(sb)) continue;
      Scalar c = ca * cb;
      if (merge_sign(sa, sb) < 0) c = -c;
      out.add_term(sa.united(sb), c);
    }
  }
  return out;
}

KForm wedge(std::span<const KForm> factors) {
  if (factors.empty()) throw std::invalid_argument("empty wedge product");
  KForm out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, factors[i]);
  return out;
}

KForm contract(int k, const KForm& a) {
  if (k < 1 || k > a.dim()) throw std::out_of_range("contraction index out of range");
  if (a.degree() == 0) throw std::invalid_argument("cannot contract a degree-0 form");
  KForm out(a.dim(), a.degree() - 1);
  for (const auto& [set, coeff] : a.terms()) {
    if (!set.contains(k)) continue;
    out.add_term(set.without(k), set.count_below(k) % 2 == 0 ? coeff : -coeff);
  }
  return out;
}

KForm contract(std::span<const Scalar> vector, const KForm& a) {
  if (static_cast<int>(vector.size()) != a.dim()) throw std::invalid_argument("vector length does not match form");
  if (a.degree() == 0) throw std::invalid_argument("cannot contract a degree-0 form");
  KForm out(a.dim(), a.degree() - 1);
  for (int k = 1; k <= a.dim(); ++k)
    if (!vector[static_cast<std::size_t>(k - 1)].is_zero())
      out += vector[static_cast<std::size_t>(k - 1)] * contract(k, a);
  return out;
}

KForm substitute(const KForm& a, std::span<const KForm> images) {
  if (static_cast<int>(images.size()) != a.dim()) throw std::invalid_argument("one image per generator required");
  const int n = images.empty() ? a.dim() : images.front().dim();
  for (const auto& img : images)
    if (img.degree() != 1 || img.dim() != n) throw std::invalid_argument("images must be one-forms on a common space");
  KForm out(n, a.degree());
  for (const auto& [set, coeff] : a.terms()) {
    KForm term = KForm::constant(n, coeff);
    for (int i : set.indices()) term = wedge(term, images[static_cast<std::size_t>(i - 1)]);
    out += term;
  }
  return out;
}

bool is_simple(const KForm& a) {
  if (a.degree() != 2) throw std::invalid_argument("simplicity is defined for two-forms");
  return wedge(a, a).is_zero();
}

std::optional<std::pair<KForm, KForm>> factor_simple(const KForm& a) {
  if (a.degree() != 2) throw std::invalid_argument("simplicity is defined for two-forms");
  if (a.is_zero()) return std::pair{KForm(a.dim(), 1), KForm(a.dim(), 1)};
  // For a = xi ^ zeta with a_{ij} != 0: (e_i -| a) ^ (e_j -| a) = a_{ij} a.
  const auto& [set, coeff] = *a.terms().begin();
  const auto idx = set.indices();
  KForm xi = coeff.inverse() * contract(idx[0], a);
  KForm zeta = contract(idx[1], a);
  if (wedge(xi, zeta) != a) return std::nullopt;
  return std::pair{std::move(xi), std::move(zeta)};
}

Scalar top_coefficient(const KForm& a) {
  if (a.degree() != a.dim()) throw std::invalid_argument("not a top-degree form");
  if (a.is_zero()) return Scalar();
  return a.terms().begin()->second;
}

}  // namespace halfflat
