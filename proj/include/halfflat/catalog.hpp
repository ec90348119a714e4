#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "halfflat/lie_algebra.hpp"
#include "halfflat/obstruction.hpp"
#include "halfflat/su3.hpp"

namespace halfflat {

/// One six-dimensional nilpotent Lie algebra with the per-row data of the
/// classification tables. Half-flat rows carry a frame and a basis of the
/// generator space; the others carry b1, b2 and, except for the two sporadic
/// algebras, a basis of E_1^{0,2} for the splitting generated by e^{12}.
struct CatalogEntry {
  std::string notation;
  bool half_flat = false;
  std::optional<Frame> frame;
  std::optional<std::vector<KForm>> lambda20;
  std::optional<int> b1;
  std::optional<int> b2;
  std::optional<std::vector<KForm>> e1_02;

  LieAlgebra algebra() const { return parse_notation(notation); }
  bool sporadic() const { return !half_flat && !e1_02; }
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Catalog {
 public:
  explicit Catalog(std::vector<CatalogEntry> entries);

  /// The 34 compiled-in algebras in table order.
  static const Catalog& builtin();
  /// Schema: array of {"notation", "half_flat", "frame"?, "lambda20"?, "b1"?,
  /// "b2"?, "e1_02"?}; forms as strings in the form grammar. Throws CatalogError.
  static Catalog from_json(const std::string& text);
  static Catalog load(const std::filesystem::path& path);

  /// Deterministic two-space-indented JSON in the schema above.
  std::string to_json() const;
  /// 64-bit FNV-1a of to_json(), as 16 lowercase hex digits.
  std::string checksum() const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// The entry whose notation has the same canonical form as g, if any.
  const CatalogEntry* find(const LieAlgebra& g) const;

 private:
  std::vector<CatalogEntry> entries_;
};

std::uint64_t fnv1a64(const std::string& bytes);

/// Drivers evaluate entries independently; Parallel uses OpenMP threads and
/// returns results in catalog order, identical to Serial.
enum class Execution { Serial, Parallel };

struct Table1Row {
  std::string notation;
  bool frame_is_basis = false;
  bool half_flat = false;
  bool gram_identity = false;
  bool lambda20_matches = false;
  int generator_space_dim = 0;
  HalfFlatCertificate certificate;
  /// Only when the listed frame fails: a frame found by bounded search.
  std::optional<Frame> replacement_frame;
  std::string detail;  // empty on pass; evaluation trace otherwise

  bool pass() const { return frame_is_basis && half_flat && gram_identity && lambda20_matches; }
  /// The row's claim holds, through the listed frame or a replacement.
  bool reproduced() const { return pass() || (replacement_frame.has_value() && lambda20_matches); }
};

struct Table2Row {
  std::string notation;
  bool sporadic = false;
  int b1 = 0;
  int b2 = 0;
  bool betti_match = false;
  bool coherent = false;       // e^{12} generates a coherent splitting
  bool e1_matches = false;     // span equality with the listed E_1^{0,2} basis
  int h03 = -1;
  int h04 = -1;
  std::optional<Lemma4Certificate> lemma4;
  std::string detail;

  bool pass() const;
};

/// Rows of the catalog with half_flat = true, in order.
std::vector<Table1Row> verify_table1(const Catalog& catalog = Catalog::builtin(), Execution mode = Execution::Parallel);
/// Rows with half_flat = false.
std::vector<Table2Row> verify_table2(const Catalog& catalog = Catalog::builtin(), Execution mode = Execution::Parallel);

/// The verdict for each entry (with its frame as hint), in catalog order.
/// Entries that cannot be decided or fail to evaluate rethrow after the loop.
std::vector<Verdict> classify_all(const Catalog& catalog = Catalog::builtin(), Execution mode = Execution::Parallel);

/// classify() with the catalog frame attached when g is a catalog algebra.
std::optional<Verdict> classify_with_catalog(const LieAlgebra& g, const Catalog& catalog = Catalog::builtin());

/// Frames with entries +-e^{sigma(i)} tried in a fixed order; the first
/// half-flat one, if any. Bounded to `limit` candidates.
std::optional<Frame> search_half_flat_frame(const LieAlgebra& g, std::size_t limit = 46080);

struct Partition {
  int half_flat = 0;
  int theorem1 = 0;
  int lemma4 = 0;
  int other = 0;
};
Partition partition(const std::vector<Verdict>& verdicts);

}  // namespace halfflat
