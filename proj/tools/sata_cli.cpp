// Command-line surface for the string-diagram satisfiability library.
// Links only against the public C interface.
//
// Exit-code contract:
//   sat check        10 satisfiable, 20 unsatisfiable, 1 error
//   diag eq/leq      0 true, 3 false, 2 width cap exceeded, 1 other error
//   diag normalize / render   0 ok, 2 width cap exceeded, 1 other error
//   lp model         0 ok, 1 error
//   lp equiv         0 equivalent, 3 not equivalent, 1 error
//   axioms verify    0 all laws hold, 3 otherwise, 1 error
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sata/sata.h"

namespace {

struct FreeDiagram {
  void operator()(sata_diagram* d) const { sata_diagram_free(d); }
};
struct FreeCnf {
  void operator()(sata_cnf* f) const { sata_cnf_free(f); }
};
struct FreeProgram {
  void operator()(sata_program* p) const { sata_program_free(p); }
};
struct FreeReport {
  void operator()(sata_law_report* r) const { sata_law_report_free(r); }
};
struct FreeString {
  void operator()(char* s) const { sata_string_free(s); }
};

using DiagramPtr = std::unique_ptr<sata_diagram, FreeDiagram>;
using CnfPtr = std::unique_ptr<sata_cnf, FreeCnf>;
using ProgramPtr = std::unique_ptr<sata_program, FreeProgram>;
using ReportPtr = std::unique_ptr<sata_law_report, FreeReport>;
using StringPtr = std::unique_ptr<char, FreeString>;

struct Settings {
  int max_width = 0;  // 0 = library default
  std::string format = "text";
  std::uint64_t seed = 0;  // reserved for randomized batch modes; recorded only
  bool json() const { return format == "json"; }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report_error(int status) {
  std::cerr << "error: " << sata_last_error() << '\n';
  return status == SATA_ERR_WIDTH_CAP ? 2 : 1;
}

// Diagram arguments name a file when one exists at that path; otherwise the
// argument itself is parsed as diagram text.
int load_diagram(const std::string& arg, DiagramPtr& out) {
  std::optional<std::string> text = read_file(arg);
  const std::string& source = text ? *text : arg;
  sata_diagram* raw = nullptr;
  if (int rc = sata_diagram_parse(source.c_str(), &raw)) return report_error(rc);
  out.reset(raw);
  return 0;
}

int write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << payload;
  if (!out.flush()) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return 1;
  }
  return 0;
}

int run_sat_check(const std::string& path, const std::string& method,
                  const Settings& s) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read file '" << path << "'\n";
    return 1;
  }
  sata_cnf* raw = nullptr;
  if (int rc = sata_cnf_parse_dimacs(text->c_str(), &raw)) return report_error(rc);
  CnfPtr f(raw);
  int is_sat = 0;
  const int rc = method == "brute"
                     ? sata_cnf_sat_brute(f.get(), &is_sat)
                     : sata_cnf_sat_diagram(f.get(), s.max_width, &is_sat);
  if (rc) return report_error(rc);
  if (s.json()) {
    std::cout << nlohmann::ordered_json{{"result", is_sat ? "SAT" : "UNSAT"}}.dump()
              << '\n';
  } else {
    std::cout << (is_sat ? "SAT" : "UNSAT") << '\n';
  }
  return is_sat ? 10 : 20;
}

int run_diag_compare(const std::string& lhs, const std::string& rhs,
                     bool containment, const Settings& s) {
  DiagramPtr a;
  DiagramPtr b;
  if (int rc = load_diagram(lhs, a)) return rc;
  if (int rc = load_diagram(rhs, b)) return rc;
  int verdict = 0;
  const int rc = containment
                     ? sata_diagram_leq(a.get(), b.get(), s.max_width, &verdict)
                     : sata_diagram_equal(a.get(), b.get(), s.max_width, &verdict);
  if (rc) return report_error(rc);
  if (s.json()) {
    const char* key = containment ? "less_equal" : "equal";
    std::cout << nlohmann::ordered_json{{key, verdict != 0}}.dump() << '\n';
  } else {
    std::cout << (verdict ? "true" : "false") << '\n';
  }
  return verdict ? 0 : 3;
}

int run_diag_emit(const std::string& arg, const std::string& out_path,
                  bool render_dot, const Settings& s) {
  DiagramPtr d;
  if (int rc = load_diagram(arg, d)) return rc;
  std::string payload;
  if (render_dot) {
    char* text = nullptr;
    if (int rc = sata_diagram_emit_dot(d.get(), &text)) return report_error(rc);
    payload = StringPtr(text).get();
  } else {
    sata_diagram* nf_raw = nullptr;
    if (int rc = sata_diagram_normal_form(d.get(), s.max_width, &nf_raw)) {
      return report_error(rc);
    }
    DiagramPtr nf(nf_raw);
    char* text = nullptr;
    if (int rc = sata_diagram_emit_text(nf.get(), &text)) return report_error(rc);
    payload = StringPtr(text).get();
    payload += '\n';
  }
  if (!out_path.empty()) {
    if (int rc = write_file(out_path, payload)) return rc;
  }
  if (s.json()) {
    const char* key = render_dot ? "dot" : "normal_form";
    std::string value = payload;
    if (!render_dot && !value.empty() && value.back() == '\n') value.pop_back();
    std::cout << nlohmann::ordered_json{{key, value}}.dump() << '\n';
  } else if (out_path.empty()) {
    std::cout << payload;
  }
  return 0;
}

int run_lp_model(const std::string& path, const std::string& facts,
                 const Settings& s) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read file '" << path << "'\n";
    return 1;
  }
  sata_program* raw = nullptr;
  if (int rc = sata_program_parse(text->c_str(), &raw)) return report_error(rc);
  ProgramPtr p(raw);
  char* names_raw = nullptr;
  if (int rc = sata_program_model(p.get(), facts.c_str(), s.max_width, &names_raw)) {
    return report_error(rc);
  }
  const std::string names = StringPtr(names_raw).get();
  if (s.json()) {
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    std::istringstream split(names);
    std::string atom;
    while (split >> atom) atoms.push_back(atom);
    std::cout << nlohmann::ordered_json{{"model", atoms}}.dump() << '\n';
  } else {
    std::cout << names << '\n';
  }
  return 0;
}

int run_lp_equiv(const std::string& lhs, const std::string& rhs,
                 const Settings& s) {
  ProgramPtr programs[2];
  const std::string* paths[2] = {&lhs, &rhs};
  for (int i = 0; i < 2; ++i) {
    std::optional<std::string> text = read_file(*paths[i]);
    if (!text) {
      std::cerr << "error: cannot read file '" << *paths[i] << "'\n";
      return 1;
    }
    sata_program* raw = nullptr;
    if (int rc = sata_program_parse(text->c_str(), &raw)) return report_error(rc);
    programs[i].reset(raw);
  }
  int verdict = 0;
  if (int rc = sata_program_equiv(programs[0].get(), programs[1].get(),
                                  s.max_width, &verdict)) {
    return report_error(rc);
  }
  if (s.json()) {
    std::cout << nlohmann::ordered_json{{"equivalent", verdict != 0}}.dump() << '\n';
  } else {
    std::cout << (verdict ? "true" : "false") << '\n';
  }
  return verdict ? 0 : 3;
}

int run_axioms_verify(bool force_json, const Settings& s) {
  sata_law_report* raw = nullptr;
  if (int rc = sata_laws_run(s.max_width, &raw)) return report_error(rc);
  ReportPtr report(raw);
  const int n = sata_law_report_count(report.get());
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    if (sata_law_report_holds(report.get(), i) != 1) ++failures;
  }
  if (force_json || s.json()) {
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
      laws.push_back({{"name", sata_law_report_name(report.get(), i)},
                      {"holds", sata_law_report_holds(report.get(), i) == 1},
                      {"detail", sata_law_report_detail(report.get(), i)}});
    }
    std::cout << nlohmann::ordered_json{{"laws", laws}, {"all_hold", failures == 0}}.dump()
              << '\n';
  } else {
    for (int i = 0; i < n; ++i) {
      const bool holds = sata_law_report_holds(report.get(), i) == 1;
      std::cout << (holds ? "pass " : "FAIL ") << sata_law_report_name(report.get(), i);
      if (!holds) std::cout << ": " << sata_law_report_detail(report.get(), i);
      std::cout << '\n';
    }
    if (failures == 0) {
      std::cout << "all " << n << " laws hold\n";
    } else {
      std::cout << failures << " of " << n << " laws fail\n";
    }
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Settings settings;
  int exit_code = 0;

  // SATA_MAX_WIDTH mirrors --max-width; an explicit flag wins. A malformed
  // value is rejected loudly rather than silently running with the default.
  if (const char* env = std::getenv("SATA_MAX_WIDTH")) {
    const std::string text(env);
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value < 1 || value > 30) {
      std::fprintf(stderr, "error: SATA_MAX_WIDTH must be an integer in 1..30, got \"%s\"\n",
                   env);
      return 1;
    }
    settings.max_width = value;
  }

  CLI::App app{"string-diagram calculus for Boolean satisfiability"};
  app.require_subcommand(1);
  app.add_option("--max-width", settings.max_width,
                 "cap on total address bits (input + output wires) of any "
                 "relation table built during evaluation (default 24, or the "
                 "SATA_MAX_WIDTH environment variable)")
      ->check(CLI::Range(1, 30));
  app.add_option("--format", settings.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", settings.seed,
                 "seed recorded for randomized batch modes; the current "
                 "commands are fully deterministic");

  // sat check FILE [--method diagram|brute]
  auto* sat_cmd = app.add_subcommand("sat", "CNF satisfiability");
  sat_cmd->require_subcommand(1);
  auto* sat_check = sat_cmd->add_subcommand("check", "decide satisfiability of a DIMACS file");
  std::string sat_file;
  std::string sat_method = "diagram";
  sat_check->add_option("file", sat_file, "DIMACS CNF file")->required();
  sat_check->add_option("--method", sat_method, "decision procedure")
      ->check(CLI::IsMember({"diagram", "brute"}));
  sat_check->callback(
      [&] { exit_code = run_sat_check(sat_file, sat_method, settings); });

  // diag {eq|leq|normalize|render}
  auto* diag_cmd = app.add_subcommand("diag", "diagram queries");
  diag_cmd->require_subcommand(1);
  std::string diag_lhs;
  std::string diag_rhs;
  std::string diag_out;

  auto* diag_eq = diag_cmd->add_subcommand("eq", "semantic equality of two diagrams");
  diag_eq->add_option("lhs", diag_lhs, "diagram file or inline text")->required();
  diag_eq->add_option("rhs", diag_rhs, "diagram file or inline text")->required();
  diag_eq->callback(
      [&] { exit_code = run_diag_compare(diag_lhs, diag_rhs, false, settings); });

  auto* diag_leq = diag_cmd->add_subcommand("leq", "semantic containment of two diagrams");
  diag_leq->add_option("lhs", diag_lhs, "diagram file or inline text")->required();
  diag_leq->add_option("rhs", diag_rhs, "diagram file or inline text")->required();
  diag_leq->callback(
      [&] { exit_code = run_diag_compare(diag_lhs, diag_rhs, true, settings); });

  auto* diag_normalize =
      diag_cmd->add_subcommand("normalize", "canonical form of a diagram");
  diag_normalize->add_option("diagram", diag_lhs, "diagram file or inline text")
      ->required();
  diag_normalize->add_option("--out", diag_out, "write the result to this file");
  diag_normalize->callback(
      [&] { exit_code = run_diag_emit(diag_lhs, diag_out, false, settings); });

  auto* diag_render = diag_cmd->add_subcommand("render", "graphviz rendering of a diagram");
  diag_render->add_option("diagram", diag_lhs, "diagram file or inline text")
      ->required();
  diag_render->add_option("--out", diag_out, "write the result to this file");
  diag_render->callback(
      [&] { exit_code = run_diag_emit(diag_lhs, diag_out, true, settings); });

  // lp {model|equiv}
  auto* lp_cmd = app.add_subcommand("lp", "definite logic programs");
  lp_cmd->require_subcommand(1);
  std::string lp_file;
  std::string lp_file2;
  std::string lp_facts;

  auto* lp_model = lp_cmd->add_subcommand("model", "least model containing the given facts");
  lp_model->add_option("file", lp_file, "program file")->required();
  lp_model->add_option("--facts", lp_facts, "comma-separated atoms assumed true");
  lp_model->callback([&] { exit_code = run_lp_model(lp_file, lp_facts, settings); });

  auto* lp_equiv = lp_cmd->add_subcommand("equiv", "equality of consequence operators");
  lp_equiv->add_option("first", lp_file, "program file")->required();
  lp_equiv->add_option("second", lp_file2, "program file")->required();
  lp_equiv->callback([&] { exit_code = run_lp_equiv(lp_file, lp_file2, settings); });

  // axioms verify [--json]
  auto* axioms_cmd = app.add_subcommand("axioms", "equational law suite");
  axioms_cmd->require_subcommand(1);
  auto* axioms_verify =
      axioms_cmd->add_subcommand("verify", "check every law against the semantics");
  bool axioms_json = false;
  axioms_verify->add_flag("--json", axioms_json, "emit a machine-readable report");
  axioms_verify->callback(
      [&] { exit_code = run_axioms_verify(axioms_json, settings); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return exit_code;
}
