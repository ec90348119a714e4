#include "halfflat/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "halfflat/form_parser.hpp"
#include "halfflat/splitting.hpp"

namespace halfflat {

namespace {

using Json = nlohmann::ordered_json;

struct RawEntry {
  const char* notation;
  const char* frame;     // Table 1
  const char* lambda20;  // Table 1; "all" for every two-form
  int b1;                // Table 2, -1 when absent
  int b2;
  const char* e1_02;     // Table 2, nullptr for the sporadic rows
};

// clang-format off
constexpr std::array<RawEntry, 34> kRaw = {{
    {"0,0,12,13,23,14", "e1,e5,e2,e4,e3,e6", "e12", -1, -1, nullptr},
    {"0,0,12,13,23,14+25", "e1-e2,e4,e5,e2,e6,e3", "e12", -1, -1, nullptr},
    {"0,0,12,13,23,14-25", "e3,e6,e4,e4-e2,-e5,e1+e5", "e12", -1, -1, nullptr},
    {"0,0,12,13,14+23,24+15", "-e5,e2,e4,e1,r2*(e3-e5),1/2*r2*e6", "e12", -1, -1, nullptr},
    {"0,0,0,12,14,15+23", "e2+e5,e2+e5+e6,e4,e2,e3,e1", "e12,e13", -1, -1, nullptr},
    {"0,0,0,12,14-23,15+34", "e2,e4,e3,e1,e6,e5", "e13", -1, -1, nullptr},
    {"0,0,0,12,14,15", "e1,e3,e2,e5,e4,e6", "e12,e13", -1, -1, nullptr},
    {"0,0,0,12,23,14+35", "e1,e3,e4,e5,e6,e2", "e13", -1, -1, nullptr},
    {"0,0,0,12,23,14-35", "e1,e3,e2,e6,e5,e4", "e13", -1, -1, nullptr},
    {"0,0,0,12,13,14+35", "e2,e6,-e3,e4,e1,-e2-e5", "e13", -1, -1, nullptr},
    {"0,0,0,12,13,14+23", "e2-e6,e1+e5,e4,e1,e6,e3", "e12,e13", -1, -1, nullptr},
    {"0,0,0,12,13,24", "e1,e6,e2,e3,e4,e5", "e12,e23", -1, -1, nullptr},
    {"0,0,0,12,13,23", "e1,e4,e2,e5,e3,e6", "e12,e13,e23", -1, -1, nullptr},
    {"0,0,0,12,14,15+24", "e1,e3,e2,e4,e3+e5,-e6", "e12", -1, -1, nullptr},
    {"0,0,0,12,14,15+23+24", "e1,e3,e2,e4-e2,e3+e5,-e6", "e12", -1, -1, nullptr},
    {"0,0,0,0,12,14+25", "e1-e6,e4,e5,e2,e6,e3", "e12,e24", -1, -1, nullptr},
    {"0,0,0,0,12,15+34", "e1,e3,e5,e4,e6,e2", "e13,e14", -1, -1, nullptr},
    {"0,0,0,0,13+42,14+23", "e1,e2,e3,e4,e5,e6", "e12,-e14+e23,e13+e24,e34", -1, -1, nullptr},
    {"0,0,0,0,12,14+23", "e1,e3,e2,e4,e6,e5", "e12,e13,e23-e14,e24", -1, -1, nullptr},
    {"0,0,0,0,12,13", "e1,e4,e2,e3,e5,e6", "e12,e13,e14,e23", -1, -1, nullptr},
    {"0,0,0,0,12,34", "e1+e3,e1,e6,e5,e2,e4", "e13,e14,e23,e24", -1, -1, nullptr},
    {"0,0,0,0,0,12+34", "e1,e2,e4,e3,e5,e6", "e13,e14,e23,e24,-e12+e34", -1, -1, nullptr},
    {"0,0,0,0,0,12", "e1,e3,e2,e4,e5,e6", "e12,e13,e14,e15,e23,e24,e25", -1, -1, nullptr},
    {"0,0,0,0,0,0", "e1,e2,e3,e4,e5,e6", "all", -1, -1, nullptr},
    {"0,0,12,13,14+23,34+52", nullptr, nullptr, 2, 2, nullptr},
    {"0,0,12,13,14,34+52", nullptr, nullptr, 2, 2, nullptr},
    {"0,0,12,13,14,15", nullptr, nullptr, 2, 3, "e34,-e36+e45"},
    {"0,0,12,13,14,23+15", nullptr, nullptr, 2, 3, "e34,e45-e36"},
    {"0,0,0,12,14,24", nullptr, nullptr, 3, 5, "e34,e45,e46"},
    {"0,0,0,12,13+42,14+23", nullptr, nullptr, 3, 5, "e34,e45+e36,e46-e35"},
    {"0,0,0,12,14,13+42", nullptr, nullptr, 3, 5, "e34,e45,e35+e46"},
    {"0,0,0,12,13+14,24", nullptr, nullptr, 3, 5, "e34,e45+e35,e46"},
    {"0,0,0,12,13,14", nullptr, nullptr, 3, 6, "e34,e35,e36+e45,e46"},
    {"0,0,0,0,12,15", nullptr, nullptr, 4, 7, "e34,e35,e45,e56"},
}};
// clang-format on

constexpr int kDim = 6;

std::vector<KForm> all_two_forms() {
  std::vector<KForm> out;
  for (IndexSet s : canonical_basis(kDim, 2)) out.push_back(KForm::basis(kDim, s));
  return out;
}

CatalogEntry from_raw(const RawEntry& raw) {
  CatalogEntry e;
  e.notation = raw.notation;
  e.half_flat = raw.frame != nullptr;
  if (raw.frame) e.frame = parse_frame(raw.frame);
  if (raw.lambda20)
    e.lambda20 = std::string(raw.lambda20) == "all" ? all_two_forms() : parse_form_list(raw.lambda20, kDim);
  if (raw.b1 >= 0) e.b1 = raw.b1;
  if (raw.b2 >= 0) e.b2 = raw.b2;
  if (raw.e1_02) e.e1_02 = parse_form_list(raw.e1_02, kDim);
  return e;
}

Json forms_json(const std::vector<KForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::vector<KForm> forms_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw CatalogError(std::string("field '") + field + "' must be an array of strings");
  std::vector<KForm> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw CatalogError(std::string("field '") + field + "' must be an array of strings");
    out.push_back(parse_form(item.get<std::string>(), kDim));
  }
  return out;
}

template <typename Row, typename Fn>
std::vector<Row> run(std::size_t count, Execution mode, Fn&& fn) {
  std::vector<Row> rows(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long>(count);
  if (mode == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return rows;
}

std::vector<const CatalogEntry*> select(const Catalog& catalog, bool half_flat) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog.entries())
    if (e.half_flat == half_flat) out.push_back(&e);
  return out;
}

std::string join(const std::vector<KForm>& forms) {
  std::string out;
  for (const auto& f : forms) out += (out.empty() ? "" : ", ") + f.to_string();
  return out.empty() ? "(none)" : out;
}

Table1Row check_table1(const CatalogEntry& entry) {
  Table1Row row;
  row.notation = entry.notation;
  const LieAlgebra g = entry.algebra();
  const Subspace space = generator_space(g);
  row.generator_space_dim = space.dim();
  if (entry.lambda20) row.lambda20_matches = span(kDim, 2, *entry.lambda20) == space;
  if (!row.lambda20_matches)
    row.detail += "generator space " + join(space.basis()) + " differs from listed " +
                  join(entry.lambda20.value_or(std::vector<KForm>{})) + "; ";
  if (entry.frame) {
    row.frame_is_basis = true;  // Frame construction rejects degenerate frames
    row.certificate = is_half_flat(g, forms_from_frame(*entry.frame));
    row.half_flat = row.certificate.half_flat;
    row.gram_identity = gram_from_forms(*entry.frame) == Matrix::identity(kDim);
  } else {
    row.detail += "no frame listed; ";
  }
  if (entry.frame && !row.half_flat) {
    row.detail += "listed frame is not half-flat: d(omega)^omega = " + row.certificate.d_omega_wedge_omega.to_string() +
                  ", d(psi+) = " + row.certificate.d_psi_plus.to_string() + "; ";
    row.replacement_frame = search_half_flat_frame(g);
    if (row.replacement_frame)
      row.detail += "replacement frame found: " + join(row.replacement_frame->eta());
    else
      row.detail += "no replacement frame within the search bound";
  }
  return row;
}

Table2Row check_table2(const CatalogEntry& entry) {
  Table2Row row;
  row.notation = entry.notation;
  row.sporadic = entry.sporadic();
  const LieAlgebra g = entry.algebra();
  const CohomologySummary c = cohomology(g);
  row.b1 = c.betti[1];
  row.b2 = c.betti[2];
  row.betti_match = entry.b1 == row.b1 && entry.b2 == row.b2;
  if (!row.betti_match)
    row.detail += "b1, b2 = " + std::to_string(row.b1) + ", " + std::to_string(row.b2) + " differ from the table; ";
  if (row.sporadic) {
    try {
      row.lemma4 = lemma4_verify(g);
    } catch (const CertificateRefused& err) {
      row.detail += std::string("sporadic certificate refused: ") + err.what();
    }
    return row;
  }
  try {
    const CoherentSplitting s = splitting_from_generator(g, KForm::basis(kDim, IndexSet::of({1, 2})));
    row.coherent = true;
    const E1Table e1 = e1_term(g, s);
    row.e1_matches = e1.e1_02 == span(kDim, 2, *entry.e1_02);
    if (!row.e1_matches)
      row.detail += "E_1^{0,2} = " + join(e1.e1_02.basis()) + " differs from listed " + join(*entry.e1_02) + "; ";
    const HpqTable t = hpq(g, s);
    row.h03 = t.at(0, 3);
    row.h04 = t.at(0, 4);
    if (row.h03 != 0 || row.h04 != 0)
      row.detail += "h03, h04 = " + std::to_string(row.h03) + ", " + std::to_string(row.h04) + "; ";
  } catch (const IncoherentSplitting& err) {
    row.detail += std::string("e^{12} does not give a coherent splitting: ") + err.what();
  }
  return row;
}

}  // namespace

bool Table2Row::pass() const {
  if (!betti_match) return false;
  if (sporadic) return lemma4.has_value();
  return coherent && e1_matches && h03 == 0 && h04 == 0;
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

const Catalog& Catalog::builtin() {
  static const Catalog instance = [] {
    std::vector<CatalogEntry> entries;
    for (const auto& raw : kRaw) entries.push_back(from_raw(raw));
    return Catalog(std::move(entries));
  }();
  return instance;
}

Catalog Catalog::from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + err.what());
  }
  if (!doc.is_array()) throw CatalogError("catalog must be a JSON array");
  std::vector<CatalogEntry> entries;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("notation") || !item["notation"].is_string() || !item.contains("half_flat") ||
        !item["half_flat"].is_boolean())
      throw CatalogError("each entry needs a string 'notation' and a boolean 'half_flat'");
    CatalogEntry e;
    e.notation = item["notation"].get<std::string>();
    const LieAlgebra g = parse_notation(e.notation);
    if (g.dim() != kDim) throw CatalogError("catalog algebras must be six-dimensional: " + e.notation);
    e.half_flat = item["half_flat"].get<bool>();
    if (item.contains("frame")) e.frame = Frame(forms_from_json(item["frame"], "frame"));
    if (item.contains("lambda20")) e.lambda20 = forms_from_json(item["lambda20"], "lambda20");
    for (const char* key : {"b1", "b2"})
      if (item.contains(key) && !item[key].is_number_integer()) throw CatalogError(std::string("'") + key + "' must be an integer");
    if (item.contains("b1")) e.b1 = item["b1"].get<int>();
    if (item.contains("b2")) e.b2 = item["b2"].get<int>();
    if (item.contains("e1_02")) e.e1_02 = forms_from_json(item["e1_02"], "e1_02");
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read catalog file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::string Catalog::to_json() const {
  Json doc = Json::array();
  for (const auto& e : entries_) {
    Json item;
    item["notation"] = e.notation;
    item["half_flat"] = e.half_flat;
    if (e.frame) item["frame"] = forms_json(e.frame->eta());
    if (e.lambda20) item["lambda20"] = forms_json(*e.lambda20);
    if (e.b1) item["b1"] = *e.b1;
    if (e.b2) item["b2"] = *e.b2;
    if (e.e1_02) item["e1_02"] = forms_json(*e.e1_02);
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string Catalog::checksum() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json())));
  return buf;
}

const CatalogEntry* Catalog::find(const LieAlgebra& g) const {
  const std::string key = format_notation(g);
  for (const auto& e : entries_)
    if (format_notation(e.algebra()) == key) return &e;
  return nullptr;
}

std::vector<Table1Row> verify_table1(const Catalog& catalog, Execution mode) {
  const auto rows = select(catalog, true);
  return run<Table1Row>(rows.size(), mode, [&](std::size_t i) { return check_table1(*rows[i]); });
}

std::vector<Table2Row> verify_table2(const Catalog& catalog, Execution mode) {
  const auto rows = select(catalog, false);
  return run<Table2Row>(rows.size(), mode, [&](std::size_t i) { return check_table2(*rows[i]); });
}

std::vector<Verdict> classify_all(const Catalog& catalog, Execution mode) {
  const auto& entries = catalog.entries();
  return run<Verdict>(entries.size(), mode, [&](std::size_t i) {
    const CatalogEntry& e = entries[i];
    auto v = classify(e.algebra(), e.frame);
    if (!v) throw DomainError("catalog algebra " + e.notation + " left undecided");
    return *v;
  });
}

std::optional<Verdict> classify_with_catalog(const LieAlgebra& g, const Catalog& catalog) {
  const CatalogEntry* entry = g.dim() == kDim ? catalog.find(g) : nullptr;
  return classify(g, entry ? entry->frame : std::nullopt);
}

std::optional<Frame> search_half_flat_frame(const LieAlgebra& g, std::size_t limit) {
  std::array<int, kDim> perm = {1, 2, 3, 4, 5, 6};
  std::size_t tried = 0;
  do {
    for (int signs = 0; signs < (1 << kDim); ++signs) {
      if (tried++ >= limit) return std::nullopt;
      std::vector<KForm> eta;
      for (int i = 0; i < kDim; ++i) {
        KForm f = KForm::generator(kDim, perm[static_cast<std::size_t>(i)]);
        eta.push_back((signs >> i) & 1 ? -f : f);
      }
      Frame frame(std::move(eta));
      if (is_half_flat(g, forms_from_frame(frame)).half_flat) return frame;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Partition partition(const std::vector<Verdict>& verdicts) {
  Partition p;
  for (const auto& v : verdicts) {
    if (v.status == Status::HalfFlat) {
      ++p.half_flat;
    } else if (v.reason == Reason::Theorem1) {
      ++p.theorem1;
    } else if (v.reason == Reason::Lemma4) {
      ++p.lemma4;
    } else {
      ++p.other;
    }
  }
  return p;
}

}  // namespace halfflat
