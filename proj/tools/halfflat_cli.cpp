// halfflat: command-line front end for the half-flat classification library.
//
// Exit codes: 0 everything checked passed, 1 some verification failed,
// 2 bad input (syntax, unknown flags, algebra outside a command's domain).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "halfflat/catalog.hpp"
#include "halfflat/form_parser.hpp"
#include "halfflat/lie_algebra.hpp"
#include "halfflat/obstruction.hpp"
#include "halfflat/splitting.hpp"
#include "halfflat/su3.hpp"

namespace {

using namespace halfflat;
using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string caret(const std::string& what, std::string_view text, std::size_t pos) {
  std::ostringstream out;
  out << what << "\n  " << text << "\n  " << std::string(std::min(pos, text.size()), ' ') << "^";
  return out.str();
}

LieAlgebra read_notation(const std::string& text) {
  try {
    return parse_notation(text);
  } catch (const ParseError& err) {
    throw InputError(caret(std::string("bad notation: ") + err.what(), text, err.position()));
  }
}

KForm read_two_form(const std::string& text, int n) {
  KForm a;
  try {
    a = parse_form(text, n);
  } catch (const ParseError& err) {
    throw InputError(caret(std::string("bad form: ") + err.what(), text, err.position()));
  }
  if (a.is_zero() || a.degree() != 2) throw InputError("generator must be a nonzero two-form: " + text);
  return a;
}

Frame read_frame(const std::string& text) {
  try {
    return parse_frame(text);
  } catch (const ParseError& err) {
    throw InputError(caret(std::string("bad frame: ") + err.what(), text, err.position()));
  } catch (const DomainError& err) {
    throw InputError(std::string("bad frame: ") + err.what());
  }
}

Json forms_json(const std::vector<KForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

std::string join(const std::vector<KForm>& forms) {
  std::string out;
  for (const auto& f : forms) out += (out.empty() ? "" : ", ") + f.to_string();
  return out.empty() ? "(none)" : out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Plain text table with columns padded to the widest cell.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string hpq_text(const HpqTable& t) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"h^{p,q}"};
  for (int q = 0; q <= t.dim - t.rank; ++q) head.push_back("q=" + std::to_string(q));
  rows.push_back(head);
  for (int p = 0; p <= t.rank; ++p) {
    std::vector<std::string> row = {"p=" + std::to_string(p)};
    for (int q = 0; q <= t.dim - t.rank; ++q) row.push_back(std::to_string(t.at(p, q)));
    rows.push_back(row);
  }
  return aligned(rows);
}

Json hpq_json(const HpqTable& t, const Subspace& e1_02) {
  return Json{{"h", t.h}, {"b", t.betti}, {"e1_02_basis", forms_json(e1_02.basis())}};
}

Json lemma4_json(const Lemma4Certificate& c) {
  return Json{{"derived_length", c.derived_length},
              {"generator_space_dim", c.generator_space_dim},
              {"z4_basis", forms_json(c.z4_basis)},
              {"exact_forms", forms_json(c.exact_forms)},
              {"primitives", forms_json(c.primitives)},
              {"trilinear_vanishes", c.trilinear_vanishes}};
}

Json verdict_json(const Verdict& v) {
  Json j{{"algebra", v.algebra}, {"status", to_string(v.status)}, {"reason", to_string(v.reason)},
         {"cond1", v.cond1},     {"cond2", v.cond2}};
  if (v.witness_frame) j["witness_frame"] = forms_json(v.witness_frame->eta());
  if (v.witness_generator) j["witness_generator"] = v.witness_generator->to_string();
  if (v.witness_table) j["witness_hpq"] = Json{{"h", v.witness_table->h}, {"b", v.witness_table->betti}};
  if (v.lemma4) j["lemma4"] = lemma4_json(*v.lemma4);
  j["theorem2_consistent"] = v.theorem2_consistent;
  return j;
}

std::string witness_text(const Verdict& v) {
  if (v.witness_frame) return "frame " + join(v.witness_frame->eta());
  if (v.witness_generator)
    return "generator " + v.witness_generator->to_string() + " (h03=" + std::to_string(v.witness_table->at(0, 3)) +
           ", h04=" + std::to_string(v.witness_table->at(0, 4)) + ")";
  if (v.lemma4) return "sporadic certificate";
  return "-";
}

struct Output {
  bool json = false;
  std::string text;
  int code = 0;
};

// Verdicts must agree with the catalog flag and with the Theorem 2 cross-check.
bool verdict_ok(const Verdict& v, const Catalog& catalog) {
  if (!v.theorem2_consistent) return false;
  const CatalogEntry* e = catalog.find(parse_notation(v.algebra));
  return !e || e->half_flat == (v.status == Status::HalfFlat);
}

Output cmd_parse(const std::string& notation, bool json) {
  const LieAlgebra g = read_notation(notation);
  const bool jacobi = check_jacobi(g);
  Output out{json};
  out.code = jacobi ? 0 : 1;
  std::optional<bool> nilpotent, unimodular;
  std::optional<int> dl;
  if (jacobi) {
    nilpotent = is_nilpotent(g);
    unimodular = is_unimodular(g);
    dl = derived_length(g);
  }
  if (json) {
    auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
    Json j{{"notation", format_notation(g)}, {"dim", g.dim()},        {"jacobi", jacobi}, {"nilpotent", opt(nilpotent)},
           {"unimodular", opt(unimodular)},  {"solvable", jacobi ? Json(dl.has_value()) : Json(nullptr)},
           {"derived_length", opt(dl)}};
    out.text = j.dump(2) + "\n";
    return out;
  }
  auto flag = [](const std::optional<bool>& b) { return b ? yes(*b) : std::string("-"); };
  out.text = aligned({{"notation", format_notation(g)},
                      {"dim", std::to_string(g.dim())},
                      {"jacobi", yes(jacobi)},
                      {"nilpotent", flag(nilpotent)},
                      {"unimodular", flag(unimodular)},
                      {"derived length", dl ? std::to_string(*dl) : (jacobi ? "not solvable" : "-")}});
  return out;
}

Output cmd_cohomology(const std::string& notation, bool json) {
  const LieAlgebra g = read_notation(notation);
  const CohomologySummary c = cohomology(g);
  std::vector<int> z, b;
  for (const auto& s : c.closed) z.push_back(s.dim());
  for (const auto& s : c.exact) b.push_back(s.dim());
  Output out{json};
  if (json) {
    out.text = Json{{"notation", format_notation(g)}, {"b", c.betti}, {"closed_dims", z}, {"exact_dims", b}}.dump(2) + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> rows = {{"k", "b_k", "dim Z^k", "dim B^k"}};
  for (std::size_t k = 0; k < c.betti.size(); ++k)
    rows.push_back({std::to_string(k), std::to_string(c.betti[k]), std::to_string(z[k]), std::to_string(b[k])});
  out.text = "algebra " + format_notation(g) + "\n" + aligned(rows);
  return out;
}

Output cmd_splittings(const std::string& notation, const std::optional<std::string>& generator, bool json) {
  const LieAlgebra g = read_notation(notation);
  if (!check_jacobi(g)) throw DomainError("Jacobi identity fails for " + notation);
  std::optional<Subspace> space;
  if (is_nilpotent(g)) {
    space = generator_space(g);
  } else if (!generator) {
    throw DomainError("the generator space is only defined for nilpotent algebras; pass --generator");
  }
  std::vector<KForm> generators = generator ? std::vector<KForm>{read_two_form(*generator, g.dim())} : witness_generators(g);

  Output out{json};
  Json list = Json::array();
  std::string text = "algebra " + format_notation(g) + "\n";
  if (space) text += "generator space (dim " + std::to_string(space->dim()) + "): " + join(space->basis()) + "\n";
  for (const auto& alpha : generators) {
    Json item{{"generator", alpha.to_string()}};
    text += "\ngenerator " + alpha.to_string() + ": ";
    std::optional<CoherentSplitting> s;
    try {
      s.emplace(splitting_from_generator(g, alpha));
    } catch (const IncoherentSplitting& err) {
      item["coherent"] = false;
      item["reason"] = err.what();
      text += std::string("not coherent (") + err.what() + ")\n";
      out.code = 1;
      list.push_back(item);
      continue;
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
    const HpqTable t = hpq(g, *s);
    const E1Table e1 = e1_term(g, *s);
    item["coherent"] = true;
    item["hpq"] = hpq_json(t, e1.e1_02);
    list.push_back(item);
    text += "coherent\n" + hpq_text(t) + "E_1^{0,2}: " + join(e1.e1_02.basis()) + "\n";
  }
  if (json) {
    Json j{{"notation", format_notation(g)}};
    j["generator_space"] = space ? forms_json(space->basis()) : Json(nullptr);
    j["splittings"] = list;
    out.text = j.dump(2) + "\n";
  } else {
    out.text = text;
  }
  return out;
}

Output cmd_classify(const std::optional<std::string>& notation, bool all, const Catalog& catalog, bool json) {
  if (all == notation.has_value()) throw InputError("classify takes either a notation or --all");
  Output out{json};
  if (!all) {
    const LieAlgebra g = read_notation(*notation);
    const auto v = classify_with_catalog(g, catalog);
    if (!v) {
      out.code = 1;
      out.text = json ? Json{{"algebra", format_notation(g)}, {"status", "undecided"}}.dump(2) + "\n"
                      : "algebra " + format_notation(g) + "\nstatus  undecided\n";
      return out;
    }
    out.code = verdict_ok(*v, catalog) ? 0 : 1;
    if (json) {
      out.text = verdict_json(*v).dump(2) + "\n";
      return out;
    }
    std::vector<std::vector<std::string>> rows = {{"algebra", v->algebra},
                                                  {"status", to_string(v->status)},
                                                  {"reason", to_string(v->reason)},
                                                  {"cond1", yes(v->cond1)},
                                                  {"cond2", yes(v->cond2)},
                                                  {"witness", witness_text(*v)}};
    if (v->witness_table) rows.push_back({"hpq", ""});
    out.text = aligned(rows);
    if (v->witness_table) out.text += hpq_text(*v->witness_table);
    return out;
  }
  const auto verdicts = classify_all(catalog);
  const Partition p = partition(verdicts);
  for (const auto& v : verdicts)
    if (!verdict_ok(v, catalog)) out.code = 1;
  if (json) {
    Json list = Json::array();
    for (const auto& v : verdicts) list.push_back(verdict_json(v));
    Json j{{"verdicts", list},
           {"partition", {{"half_flat", p.half_flat}, {"theorem1", p.theorem1}, {"lemma4", p.lemma4}, {"other", p.other}}}};
    out.text = j.dump(2) + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> rows = {{"algebra", "status", "reason", "witness"}};
  for (const auto& v : verdicts) rows.push_back({v.algebra, to_string(v.status), to_string(v.reason), witness_text(v)});
  out.text = aligned(rows) + "\nhalf_flat " + std::to_string(p.half_flat) + ", theorem1 " + std::to_string(p.theorem1) +
             ", lemma4 " + std::to_string(p.lemma4) + ", other " + std::to_string(p.other) + "\n";
  return out;
}

Output cmd_verify_frame(const std::string& notation, const std::string& frame_text, bool json) {
  const LieAlgebra g = read_notation(notation);
  if (g.dim() != 6) throw InputError("frames need a six-dimensional algebra");
  if (!check_jacobi(g)) throw DomainError("Jacobi identity fails for " + notation);
  const Frame frame = read_frame(frame_text);
  const HalfFlatCertificate c = is_half_flat(g, forms_from_frame(frame));
  Output out{json};
  out.code = c.half_flat ? 0 : 1;
  if (json) {
    out.text = Json{{"notation", format_notation(g)},
                    {"frame", forms_json(frame.eta())},
                    {"half_flat", c.half_flat},
                    {"d_omega_wedge_omega", c.d_omega_wedge_omega.to_string()},
                    {"d_psi_plus", c.d_psi_plus.to_string()}}
                   .dump(2) +
               "\n";
    return out;
  }
  out.text = aligned({{"algebra", format_notation(g)},
                      {"frame", join(frame.eta())},
                      {"d(omega)^omega", c.d_omega_wedge_omega.to_string()},
                      {"d(psi+)", c.d_psi_plus.to_string()},
                      {"half_flat", yes(c.half_flat)}});
  return out;
}

Output cmd_tables(const Catalog& catalog, bool json) {
  const auto t1 = verify_table1(catalog);
  const auto t2 = verify_table2(catalog);
  int passed = 0;
  for (const auto& r : t1) passed += r.pass();
  for (const auto& r : t2) passed += r.pass();
  const int total = static_cast<int>(t1.size() + t2.size());
  Output out{json};
  out.code = passed == total ? 0 : 1;
  if (json) {
    Json rows1 = Json::array(), rows2 = Json::array();
    for (const auto& r : t1) {
      Json j{{"notation", r.notation},
             {"pass", r.pass()},
             {"frame_is_basis", r.frame_is_basis},
             {"half_flat", r.half_flat},
             {"gram_identity", r.gram_identity},
             {"lambda20_matches", r.lambda20_matches},
             {"generator_space_dim", r.generator_space_dim}};
      if (r.replacement_frame) j["replacement_frame"] = forms_json(r.replacement_frame->eta());
      if (!r.detail.empty()) j["detail"] = r.detail;
      rows1.push_back(j);
    }
    for (const auto& r : t2) {
      Json j{{"notation", r.notation}, {"pass", r.pass()},          {"sporadic", r.sporadic},
             {"b1", r.b1},             {"b2", r.b2},                {"betti_match", r.betti_match}};
      if (r.sporadic) {
        j["lemma4"] = r.lemma4 ? lemma4_json(*r.lemma4) : Json(nullptr);
      } else {
        j["coherent"] = r.coherent;
        j["e1_matches"] = r.e1_matches;
        j["h03"] = r.h03;
        j["h04"] = r.h04;
      }
      if (!r.detail.empty()) j["detail"] = r.detail;
      rows2.push_back(j);
    }
    out.text = Json{{"catalog_checksum", catalog.checksum()},
                    {"table1", rows1},
                    {"table2", rows2},
                    {"passed", passed},
                    {"total", total}}
                   .dump(2) +
               "\n";
    return out;
  }
  std::vector<std::vector<std::string>> a = {{"algebra", "basis", "half-flat", "gram", "lambda20", "result"}};
  for (const auto& r : t1)
    a.push_back({r.notation, yes(r.frame_is_basis), yes(r.half_flat), yes(r.gram_identity), yes(r.lambda20_matches),
                 r.pass() ? "PASS" : "FAIL"});
  std::vector<std::vector<std::string>> b = {{"algebra", "b1", "b2", "betti", "splitting", "E1^{0,2}", "h03", "h04", "result"}};
  for (const auto& r : t2) {
    if (r.sporadic)
      b.push_back({r.notation, std::to_string(r.b1), std::to_string(r.b2), yes(r.betti_match), "none",
                   r.lemma4 ? "certificate" : "refused", "-", "-", r.pass() ? "PASS" : "FAIL"});
    else
      b.push_back({r.notation, std::to_string(r.b1), std::to_string(r.b2), yes(r.betti_match), yes(r.coherent),
                   yes(r.e1_matches), std::to_string(r.h03), std::to_string(r.h04), r.pass() ? "PASS" : "FAIL"});
  }
  out.text = "half-flat algebras\n" + aligned(a) + "\nobstructed algebras\n" + aligned(b);
  for (const auto& r : t1)
    if (!r.detail.empty()) out.text += "\n" + r.notation + ": " + r.detail;
  for (const auto& r : t2)
    if (!r.detail.empty()) out.text += "\n" + r.notation + ": " + r.detail;
  out.text += "\n" + std::to_string(passed) + "/" + std::to_string(total) + " rows pass\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for half-flat SU(3)-structures on six-dimensional nilmanifolds", "halfflat"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "table";
  bool quiet = false;
  std::optional<std::string> catalog_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--quiet", quiet, "Suppress standard output; only the exit code reports");
  app.add_option("--catalog", catalog_path, "JSON catalog to use instead of the built-in one");

  std::string notation;
  std::optional<std::string> opt_notation, generator;
  std::string frame_text;
  bool all = false;

  auto* parse = app.add_subcommand("parse", "Canonical notation and structural flags");
  parse->add_option("notation", notation)->required();
  auto* cohomology_cmd = app.add_subcommand("cohomology", "Betti numbers and dimensions of Z^k, B^k");
  cohomology_cmd->add_option("notation", notation)->required();
  auto* splittings = app.add_subcommand("splittings", "Coherent splittings and their h^{p,q} tables");
  splittings->add_option("notation", notation)->required();
  splittings->add_option("--generator", generator, "Simple two-form generating V1, e.g. e23");
  auto* classify_cmd = app.add_subcommand("classify", "Half-flat verdict with certificates");
  classify_cmd->add_option("notation", opt_notation);
  classify_cmd->add_flag("--all", all, "Classify every catalog algebra");
  auto* verify = app.add_subcommand("verify-frame", "Check whether a frame defines a half-flat structure");
  verify->add_option("notation", notation)->required();
  verify->add_option("--frame", frame_text, "Six one-forms, e.g. \"e1-e2,e4,e5,e2,e6,e3\"")->required();
  auto* tables = app.add_subcommand("tables", "Re-verify both classification tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  Output out;
  try {
    const Catalog catalog = catalog_path ? Catalog::load(*catalog_path) : Catalog::builtin();
    if (*parse) out = cmd_parse(notation, json);
    else if (*cohomology_cmd) out = cmd_cohomology(notation, json);
    else if (*splittings) out = cmd_splittings(notation, generator, json);
    else if (*classify_cmd) out = cmd_classify(opt_notation, all, catalog, json);
    else if (*verify) out = cmd_verify_frame(notation, frame_text, json);
    else if (*tables) out = cmd_tables(catalog, json);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }
  if (!quiet) std::cout << out.text;
  return out.code;
}
