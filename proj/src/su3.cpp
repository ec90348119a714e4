#include "halfflat/su3.hpp"

#include <stdexcept>

#include "halfflat/errors.hpp"
#include "halfflat/form_parser.hpp"

namespace halfflat {

namespace {

constexpr int kDim = 6;

std::vector<KForm> checked(std::vector<KForm> eta) {
  if (eta.size() != kDim) throw DomainError("a frame needs exactly six one-forms, got " + std::to_string(eta.size()));
  for (const auto& f : eta)
    if (f.dim() != kDim || f.degree() != 1) throw DomainError("frame entries must be one-forms on six generators");
  return eta;
}

KForm eta_form(std::initializer_list<int> indices, Scalar c = 1) {
  return KForm::basis(kDim, IndexSet::of(indices), std::move(c));
}

// The normal forms in eta-coordinates.
KForm omega_eta() { return eta_form({1, 2}) + eta_form({3, 4}) + eta_form({5, 6}); }
KForm psi_plus_eta() { return eta_form({1, 3, 5}) - eta_form({1, 4, 6}) - eta_form({2, 3, 6}) - eta_form({2, 4, 5}); }
KForm psi_minus_eta() { return eta_form({1, 3, 6}) + eta_form({1, 4, 5}) + eta_form({2, 3, 5}) - eta_form({2, 4, 6}); }

}  // namespace

Frame::Frame(std::vector<KForm> eta) : coframe_(checked(std::move(eta))) {}

Frame Frame::identity() {
  std::vector<KForm> eta;
  for (int i = 1; i <= kDim; ++i) eta.push_back(KForm::generator(kDim, i));
  return Frame(std::move(eta));
}

std::vector<std::string> Frame::to_strings() const {
  std::vector<std::string> out;
  for (const auto& f : eta()) out.push_back(f.to_string());
  return out;
}

Frame parse_frame(std::string_view text) { return Frame(parse_form_list(text, kDim)); }

SU3Forms forms_from_frame(const Frame& f) {
  const Coframe& c = f.coframe();
  return {c.from_frame(omega_eta()), c.from_frame(psi_plus_eta()), c.from_frame(psi_minus_eta())};
}

HalfFlatCertificate is_half_flat(const LieAlgebra& g, const SU3Forms& forms) {
  if (g.dim() != kDim) throw DomainError("half-flat structures live on six-dimensional algebras");
  HalfFlatCertificate out;
  out.d_omega_wedge_omega = wedge(differential(g, forms.omega), forms.omega);
  out.d_psi_plus = differential(g, forms.psi_plus);
  out.half_flat = out.d_omega_wedge_omega.is_zero() && out.d_psi_plus.is_zero();
  return out;
}

Matrix gram_from_forms(const Frame& f) { return gram_matrix(forms_from_frame(f), f); }

Matrix gram_matrix(const SU3Forms& s, const Frame& f) {
  const Scalar volume = top_coefficient(wedge(wedge(s.omega, s.omega), s.omega));
  const Scalar scale = Scalar(-3) * volume.inverse();
  std::vector<KForm> x_omega, x_psi;
  for (int a = 1; a <= kDim; ++a) {
    const Vector x = f.coframe().dual_vector(a);
    x_omega.push_back(contract(x, s.omega));
    x_psi.push_back(contract(x, s.psi_plus));
  }
  Matrix g(kDim, kDim);
  for (std::size_t a = 0; a < kDim; ++a)
    for (std::size_t b = 0; b < kDim; ++b)
      g.at(a, b) = scale * top_coefficient(wedge(wedge(x_omega[a], x_psi[b]), s.psi_plus));
  return g;
}

KForm apply_j(const Frame& f, const KForm& a) {
  if (a.degree() != 1 || a.dim() != kDim) throw std::invalid_argument("J acts on one-forms");
  const KForm local = f.coframe().to_frame(a);
  KForm out(kDim, 1);
  for (int k = 1; k <= kDim; k += 2) {
    out += local.coefficient(IndexSet::single(k)) * KForm::generator(kDim, k + 1);
    out -= local.coefficient(IndexSet::single(k + 1)) * KForm::generator(kDim, k);
  }
  return f.coframe().from_frame(out);
}

bool nondegeneracy(const Frame& f, const KForm& a) {
  if (a.degree() != 1 || a.dim() != kDim) throw std::invalid_argument("nondegeneracy takes a one-form");
  if (a.is_zero()) throw std::invalid_argument("nondegeneracy is undefined for the zero form");
  const KForm omega = forms_from_frame(f).omega;
  return !wedge(wedge(wedge(a, apply_j(f, a)), omega), omega).is_zero();
}

}  // namespace halfflat
