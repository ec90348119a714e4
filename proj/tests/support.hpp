#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// generators and a brute-force exterior product used as an independent oracle.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "halfflat/kform.hpp"
#include "halfflat/linalg.hpp"

namespace halfflat::testing {

inline Scalar random_scalar(std::mt19937& rng, bool allow_surd = true) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 4);
  Scalar s = Scalar::fraction(num(rng), den(rng));
  if (allow_surd && coin(rng) == 0) s += Scalar::fraction(num(rng), den(rng)) * Scalar::sqrt2();
  return s;
}

/// Random degree-k form on n generators; each basis term present with probability ~density.
inline KForm random_form(std::mt19937& rng, int n, int k, double density = 0.5, bool allow_surd = true) {
  KForm out(n, k);
  std::bernoulli_distribution keep(density);
  for (IndexSet s : canonical_basis(n, k))
    if (keep(rng)) out.add_term(s, random_scalar(rng, allow_surd));
  return out;
}

/// Brute-force oracle: a form as a map from *unsorted-free* index lists to
/// coefficients, wedge by concatenation followed by bubble sort with sign.
using ListForm = std::map<std::vector<int>, Scalar>;

inline ListForm to_list_form(const KForm& a) {
  ListForm out;
  for (const auto& [set, c] : a.terms()) out[set.indices()] = c;
  return out;
}

inline ListForm brute_wedge(const ListForm& a, const ListForm& b) {
  ListForm out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [ib, cb] : b) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      int sign = 1;
      bool repeated = false;
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
          if (idx[j] == idx[j + 1]) repeated = true;
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            sign = -sign;
          }
        }
      for (std::size_t j = 0; j + 1 < idx.size(); ++j)
        if (idx[j] == idx[j + 1]) repeated = true;
      if (repeated) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out[idx] += c;
      if (out[idx].is_zero()) out.erase(idx);
    }
  }
  return out;
}

/// Rank of the alternating matrix A_ij = a(e_i, e_j) of a two-form; an
/// independent route to decomposability (simple iff rank <= 2).
inline std::size_t alternating_rank(const KForm& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  Matrix m(n, n);
  for (const auto& [set, c] : a.terms()) {
    const auto idx = set.indices();
    m.at(static_cast<std::size_t>(idx[0] - 1), static_cast<std::size_t>(idx[1] - 1)) = c;
    m.at(static_cast<std::size_t>(idx[1] - 1), static_cast<std::size_t>(idx[0] - 1)) = -c;
  }
  return rank(m);
}

inline KForm e(int n, std::initializer_list<int> indices, Scalar c = 1) {
  return KForm::basis(n, IndexSet::of(indices), std::move(c));
}

}  // namespace halfflat::testing
