// Smoke test of the shared-library C interface: every entry point is called
// at least once, covering success paths, error paths, and ownership rules.
#include <cstdio>
#include <cstring>
#include <string>

#include "sata/sata.h"

static int g_failures = 0;

#define CHECK(cond)                                                      \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ++g_failures;                                                      \
      std::fprintf(stderr, "FAILED at %s:%d: %s\n", __FILE__, __LINE__, #cond); \
    }                                                                    \
  } while (0)

static void diagram_surface() {
  sata_diagram* d = nullptr;
  CHECK(sata_diagram_parse("copy ; (id * copy)", &d) == SATA_OK);
  CHECK(sata_diagram_dom(d) == 1);
  CHECK(sata_diagram_cod(d) == 3);

  char* text = nullptr;
  CHECK(sata_diagram_emit_text(d, &text) == SATA_OK);
  CHECK(std::strcmp(text, "copy ; id * copy") == 0);  // '*' binds tighter than ';'
  sata_string_free(text);

  char* json = nullptr;
  CHECK(sata_diagram_emit_json(d, &json) == SATA_OK);
  CHECK(std::strstr(json, "\"op\"") != nullptr);
  sata_string_free(json);

  char* dot = nullptr;
  CHECK(sata_diagram_emit_dot(d, &dot) == SATA_OK);
  CHECK(std::strstr(dot, "digraph") != nullptr);
  sata_string_free(dot);

  sata_diagram* e = nullptr;
  CHECK(sata_diagram_parse("copy ; (copy * id)", &e) == SATA_OK);
  int equal = -1;
  CHECK(sata_diagram_equal(d, e, 0, &equal) == SATA_OK);
  CHECK(equal == 1);  // coassociativity
  int leq = -1;
  CHECK(sata_diagram_leq(d, e, 0, &leq) == SATA_OK);
  CHECK(leq == 1);

  sata_diagram* nf = nullptr;
  CHECK(sata_diagram_normal_form(d, 0, &nf) == SATA_OK);
  sata_diagram* nfe = nullptr;
  CHECK(sata_diagram_normal_form(e, 0, &nfe) == SATA_OK);
  char* nft = nullptr;
  char* nfet = nullptr;
  CHECK(sata_diagram_emit_text(nf, &nft) == SATA_OK);
  CHECK(sata_diagram_emit_text(nfe, &nfet) == SATA_OK);
  CHECK(std::strcmp(nft, nfet) == 0);  // equal diagrams share one normal form
  sata_string_free(nft);
  sata_string_free(nfet);
  sata_diagram_free(nf);
  sata_diagram_free(nfe);
  sata_diagram_free(e);
  sata_diagram_free(d);

  // Blank text is the zero-wire diagram.
  sata_diagram* blank = nullptr;
  CHECK(sata_diagram_parse("", &blank) == SATA_OK);
  CHECK(sata_diagram_dom(blank) == 0);
  CHECK(sata_diagram_cod(blank) == 0);
  sata_diagram_free(blank);
}

static void diagram_errors() {
  sata_diagram* d = nullptr;
  CHECK(sata_diagram_parse("copy ; nonsense", &d) == SATA_ERR_PARSE);
  CHECK(d == nullptr);
  CHECK(std::strlen(sata_last_error()) > 0);
  CHECK(sata_diagram_parse("copy ; copy", &d) == SATA_ERR_ARITY);

  CHECK(sata_diagram_parse("copy ; (copy * id)", &d) == SATA_OK);
  int out = -1;
  CHECK(sata_diagram_equal(d, d, 3, &out) == SATA_ERR_WIDTH_CAP);
  CHECK(std::strstr(sata_last_error(), "width") != nullptr);
  CHECK(sata_diagram_equal(d, d, 99, &out) == SATA_ERR_INVALID_ARGUMENT);

  sata_diagram* two = nullptr;
  CHECK(sata_diagram_parse("id^2", &two) == SATA_OK);
  CHECK(sata_diagram_equal(d, two, 0, &out) == SATA_ERR_ARITY);
  sata_diagram_free(two);
  sata_diagram_free(d);

  CHECK(sata_diagram_parse(nullptr, &d) == SATA_ERR_INVALID_ARGUMENT);
  CHECK(sata_diagram_dom(nullptr) == -1);
  sata_diagram_free(nullptr);  // must be a no-op
  sata_string_free(nullptr);
}

static void cnf_surface() {
  sata_cnf* sat = nullptr;
  CHECK(sata_cnf_parse_dimacs("p cnf 2 2\n-1 2 0\n1 -2 0\n", &sat) == SATA_OK);
  CHECK(sata_cnf_num_vars(sat) == 2);
  CHECK(sata_cnf_num_clauses(sat) == 2);
  int verdict = -1;
  CHECK(sata_cnf_sat_diagram(sat, 0, &verdict) == SATA_OK);
  CHECK(verdict == 1);
  CHECK(sata_cnf_sat_brute(sat, &verdict) == SATA_OK);
  CHECK(verdict == 1);
  sata_cnf_free(sat);

  sata_cnf* unsat = nullptr;
  CHECK(sata_cnf_parse_dimacs("p cnf 2 4\n-1 2 0\n1 2 0\n1 -2 0\n-1 -2 0\n", &unsat) == SATA_OK);
  CHECK(sata_cnf_sat_diagram(unsat, 0, &verdict) == SATA_OK);
  CHECK(verdict == 0);
  sata_cnf_free(unsat);

  sata_cnf* bad = nullptr;
  CHECK(sata_cnf_parse_dimacs("p cnf 2 1\n9 0\n", &bad) == SATA_ERR_INVALID_ARGUMENT);
  CHECK(sata_cnf_parse_dimacs("no header\n", &bad) == SATA_ERR_PARSE);
}

static void program_surface() {
  const char* p_text = "%atoms: a,b,c,d\na.\nd :- b.\nd :- c.\nb :- c, d.\n";
  const char* q_text = "%atoms: a,b,c,d\na.\nd :- a, b.\nb :- c.\n";
  sata_program* p = nullptr;
  sata_program* q = nullptr;
  CHECK(sata_program_parse(p_text, &p) == SATA_OK);
  CHECK(sata_program_parse(q_text, &q) == SATA_OK);

  char* names = nullptr;
  CHECK(sata_program_model(p, "c", 0, &names) == SATA_OK);
  CHECK(std::strcmp(names, "a b c d") == 0);
  sata_string_free(names);
  CHECK(sata_program_model(p, nullptr, 0, &names) == SATA_OK);
  CHECK(std::strcmp(names, "a") == 0);
  sata_string_free(names);
  CHECK(sata_program_model(p, "zz", 0, &names) == SATA_ERR_ATOM);

  int equiv = -1;
  CHECK(sata_program_equiv(p, q, 0, &equiv) == SATA_OK);
  CHECK(equiv == 1);

  sata_program* two = nullptr;
  CHECK(sata_program_parse("%atoms: a,b\na.\n", &two) == SATA_OK);
  CHECK(sata_program_equiv(p, two, 0, &equiv) == SATA_ERR_ATOM);
  sata_program_free(two);
  sata_program_free(q);
  sata_program_free(p);
}

static void laws_surface() {
  sata_law_report* report = nullptr;
  CHECK(sata_laws_run(0, &report) == SATA_OK);
  const int n = sata_law_report_count(report);
  CHECK(n >= 60);
  int holds = 0;
  for (int i = 0; i < n; ++i) {
    CHECK(sata_law_report_name(report, i) != nullptr);
    CHECK(sata_law_report_detail(report, i) != nullptr);
    if (sata_law_report_holds(report, i) == 1) ++holds;
  }
  CHECK(holds == n);
  CHECK(sata_law_report_name(report, n) == nullptr);   // out of range
  CHECK(sata_law_report_holds(report, -1) == -1);
  sata_law_report_free(report);
  CHECK(sata_law_report_count(nullptr) == -1);
}

int main() {
  diagram_surface();
  diagram_errors();
  cnf_surface();
  program_surface();
  laws_surface();
  if (g_failures != 0) {
    std::fprintf(stderr, "%d check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all C interface checks passed\n");
  return 0;
}
