#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace halfflat {

/// Largest ambient dimension; generators are single digits 1..9.
inline constexpr int kMaxDim = 9;

/// Strictly increasing set of generator indices in 1..kMaxDim, the label of
/// the basis element e^{i1...ik}. Stored as a bitmask (bit i-1 for index i).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint16_t mask) : mask_(mask) {}
  /// Indices may come in any order; duplicates or out-of-range values throw.
  static IndexSet of(std::initializer_list<int> indices);
  static IndexSet of(const std::vector<int>& indices);
  static constexpr IndexSet single(int i) { return IndexSet(static_cast<std::uint16_t>(1u << (i - 1))); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr bool intersects(IndexSet other) const { return (mask_ & other.mask_) != 0; }
  /// Largest index, 0 when empty.
  constexpr int max_index() const { return 16 - std::countl_zero(mask_); }
  std::vector<int> indices() const;
  /// "1245"-style digit string; "" for the empty set.
  std::string digits() const;

  /// Number of elements strictly below i.
  constexpr int count_below(int i) const {
    return std::popcount(static_cast<unsigned>(mask_ & ((1u << (i - 1)) - 1u)));
  }

  constexpr IndexSet with(int i) const { return IndexSet(static_cast<std::uint16_t>(mask_ | (1u << (i - 1)))); }
  constexpr IndexSet without(int i) const { return IndexSet(static_cast<std::uint16_t>(mask_ & ~(1u << (i - 1)))); }
  constexpr IndexSet united(IndexSet other) const { return IndexSet(static_cast<std::uint16_t>(mask_ | other.mask_)); }

  friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }
  /// Lexicographic order on the sorted index lists (for equal sizes); for
  /// different sizes the smaller set comes first.
  friend constexpr bool operator<(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const unsigned diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    const unsigned lowest = diff & (~diff + 1u);
    return (a.mask_ & lowest) != 0;
  }

 private:
  std::uint16_t mask_ = 0;
};

/// Sign of the shuffle permutation that sorts the concatenation a||b, for
/// disjoint a and b: e^a wedge e^b = merge_sign(a, b) * e^{a u b}.
int merge_sign(IndexSet a, IndexSet b);

int binomial(int n, int k);

/// Canonical basis of the degree-k piece on n generators, in lexicographic
/// order; position() is the inverse lookup.
const std::vector<IndexSet>& canonical_basis(int n, int k);
int basis_position(int n, IndexSet set);

}  // namespace halfflat
