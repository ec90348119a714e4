#include "halfflat/coframe.hpp"

#include "halfflat/errors.hpp"

namespace halfflat {

Coframe::Coframe(std::vector<KForm> forms) : forms_(std::move(forms)) {
  const int n = static_cast<int>(forms_.size());
  if (n == 0) throw DomainError("empty coframe");
  std::vector<Vector> rows;
  for (const auto& f : forms_) {
    if (f.dim() != n || f.degree() != 1) throw DomainError("coframe entries must be one-forms on " + std::to_string(n) + " generators");
    rows.push_back(f.to_vector());
  }
  matrix_ = Matrix::from_rows(rows, static_cast<std::size_t>(n));
  try {
    inverse_ = halfflat::inverse(matrix_);
  } catch (const std::domain_error&) {
    throw DomainError("degenerate coframe: the one-forms are linearly dependent");
  }
  // f^a = sum_i M[a][i] e^i  =>  e^i = sum_a Minv[i][a] f^a.
  for (int i = 0; i < n; ++i) {
    KForm img(n, 1);
    for (int a = 0; a < n; ++a) {
      const Scalar& c = inverse_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(a));
      if (!c.is_zero()) img.add_term(IndexSet::single(a + 1), c);
    }
    e_in_frame_.push_back(std::move(img));
  }
}

KForm Coframe::to_frame(const KForm& a) const { return substitute(a, e_in_frame_); }

KForm Coframe::from_frame(const KForm& a) const { return substitute(a, forms_); }

Vector Coframe::dual_vector(int a) const { return inverse_.column(static_cast<std::size_t>(a - 1)); }

}  // namespace halfflat
