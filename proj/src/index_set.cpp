#include "halfflat/index_set.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace halfflat {

IndexSet IndexSet::of(const std::vector<int>& indices) {
  std::uint16_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw std::out_of_range("generator index out of range: " + std::to_string(i));
    const auto bit = static_cast<std::uint16_t>(1u << (i - 1));
    if (mask & bit) throw std::invalid_argument("repeated generator index " + std::to_string(i));
    mask |= bit;
  }
  return IndexSet(mask);
}

IndexSet IndexSet::of(std::initializer_list<int> indices) { return of(std::vector<int>(indices)); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 1; i <= kMaxDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::digits() const {
  std::string out;
  for (int i : indices()) out += static_cast<char>('0' + i);
  return out;
}

int merge_sign(IndexSet a, IndexSet b) {
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (int j : b.indices()) inversions += a.size() - a.count_below(j + 1);
  return (inversions % 2 == 0) ? 1 : -1;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return static_cast<int>(result);
}

namespace {

struct BasisTables {
  // bases[n][k]
  std::array<std::array<std::vector<IndexSet>, kMaxDim + 1>, kMaxDim + 1> bases;
  // positions[n][mask]
  std::array<std::vector<int>, kMaxDim + 1> positions;

  BasisTables() {
    for (int n = 0; n <= kMaxDim; ++n) {
      const unsigned limit = 1u << n;
      positions[n].assign(limit, -1);
      for (unsigned mask = 0; mask < limit; ++mask) {
        IndexSet set(static_cast<std::uint16_t>(mask));
        bases[n][set.size()].push_back(set);
      }
      for (int k = 0; k <= n; ++k) {
        auto& basis = bases[n][k];
        std::sort(basis.begin(), basis.end());
        for (std::size_t pos = 0; pos < basis.size(); ++pos) positions[n][basis[pos].mask()] = static_cast<int>(pos);
      }
    }
  }
};

const BasisTables& tables() {
  static const BasisTables instance;
  return instance;
}

}  // namespace

const std::vector<IndexSet>& canonical_basis(int n, int k) {
  static const std::vector<IndexSet> empty;
  if (n < 0 || n > kMaxDim || k < 0) throw std::out_of_range("no canonical basis for this (n, k)");
  if (k > n) return empty;
  return tables().bases[n][k];
}

int basis_position(int n, IndexSet set) {
  if (n < 0 || n > kMaxDim || set.max_index() > n) throw std::out_of_range("index set outside ambient dimension");
  return tables().positions[n][set.mask()];
}

}  // namespace halfflat
