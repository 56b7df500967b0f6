// C interface implementation: thin exception-to-status-code shims over the
// C++ core. Every entry point catches library errors and records a
// thread-local message retrievable via sata_last_error().
#include "sata/sata.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "errors.hpp"
#include "laws.hpp"
#include "logicprog.hpp"
#include "monrel.hpp"
#include "normalform.hpp"
#include "sat.hpp"

struct sata_diagram {
  sata::Diagram d;
};

struct sata_cnf {
  sata::CnfFormula f;
};

struct sata_program {
  sata::LogicProgram p;
};

struct sata_law_report {
  std::vector<sata::LawResult> results;
};

namespace {

thread_local std::string g_last_error;

int status_of(sata::ErrorCode c) {
  switch (c) {
    case sata::ErrorCode::Parse: return SATA_ERR_PARSE;
    case sata::ErrorCode::Arity: return SATA_ERR_ARITY;
    case sata::ErrorCode::WidthMismatch: return SATA_ERR_WIDTH_MISMATCH;
    case sata::ErrorCode::WidthCap: return SATA_ERR_WIDTH_CAP;
    case sata::ErrorCode::NotMonotone: return SATA_ERR_NOT_MONOTONE;
    case sata::ErrorCode::NotDownwardClosed: return SATA_ERR_NOT_DOWNWARD_CLOSED;
    case sata::ErrorCode::NotPrincipal: return SATA_ERR_NOT_PRINCIPAL;
    case sata::ErrorCode::Atom: return SATA_ERR_ATOM;
    case sata::ErrorCode::InvalidArgument: return SATA_ERR_INVALID_ARGUMENT;
    case sata::ErrorCode::Internal: return SATA_ERR_INTERNAL;
  }
  return SATA_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return SATA_OK;
  } catch (const sata::Error& e) {
    g_last_error = e.what();
    return status_of(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SATA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SATA_ERR_INTERNAL;
  }
}

sata::Options options_for(int max_width) {
  sata::Options opt;
  if (max_width != 0) {
    if (max_width < sata::Options::kHardMin || max_width > sata::Options::kHardMax) {
      sata::fail(sata::ErrorCode::InvalidArgument, "max_width must be between ",
                 sata::Options::kHardMin, " and ", sata::Options::kHardMax,
                 ", got ", max_width);
    }
    opt.max_width = max_width;
  }
  return opt;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return SATA_ERR_INVALID_ARGUMENT;
  }
  return SATA_OK;
}

}  // namespace

extern "C" {

const char* sata_last_error(void) { return g_last_error.c_str(); }

void sata_string_free(char* s) { std::free(s); }

/* ---- diagrams ---- */

int sata_diagram_parse(const char* text, sata_diagram** out) {
  if (int rc = require(text != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = new sata_diagram{sata::parse_sd(text)}; });
}

void sata_diagram_free(sata_diagram* d) { delete d; }

int sata_diagram_dom(const sata_diagram* d) { return d == nullptr ? -1 : d->d->dom; }

int sata_diagram_cod(const sata_diagram* d) { return d == nullptr ? -1 : d->d->cod; }

int sata_diagram_emit_text(const sata_diagram* d, char** out) {
  if (int rc = require(d != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = copy_string(sata::emit_sd(d->d)); });
}

int sata_diagram_emit_json(const sata_diagram* d, char** out) {
  if (int rc = require(d != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = copy_string(sata::emit_json(d->d)); });
}

int sata_diagram_emit_dot(const sata_diagram* d, char** out) {
  if (int rc = require(d != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = copy_string(sata::emit_dot(d->d)); });
}

int sata_diagram_equal(const sata_diagram* a, const sata_diagram* b,
                       int max_width, int* out) {
  if (int rc = require(a != nullptr && b != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = sata::decide_eq(a->d, b->d, options_for(max_width)) ? 1 : 0; });
}

int sata_diagram_leq(const sata_diagram* a, const sata_diagram* b,
                     int max_width, int* out) {
  if (int rc = require(a != nullptr && b != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = sata::decide_leq(a->d, b->d, options_for(max_width)) ? 1 : 0; });
}

int sata_diagram_normal_form(const sata_diagram* d, int max_width,
                             sata_diagram** out) {
  if (int rc = require(d != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new sata_diagram{sata::normal_form(d->d, options_for(max_width))};
  });
}

/* ---- CNF satisfiability ---- */

int sata_cnf_parse_dimacs(const char* text, sata_cnf** out) {
  if (int rc = require(text != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = new sata_cnf{sata::parse_dimacs(text)}; });
}

void sata_cnf_free(sata_cnf* f) { delete f; }

int sata_cnf_num_vars(const sata_cnf* f) { return f == nullptr ? -1 : f->f.num_vars; }

int sata_cnf_num_clauses(const sata_cnf* f) {
  return f == nullptr ? -1 : static_cast<int>(f->f.clauses.size());
}

int sata_cnf_sat_diagram(const sata_cnf* f, int max_width, int* out_sat) {
  if (int rc = require(f != nullptr && out_sat != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out_sat = sata::sat_via_diagram(f->f, options_for(max_width)) ? 1 : 0;
  });
}

int sata_cnf_sat_brute(const sata_cnf* f, int* out_sat) {
  if (int rc = require(f != nullptr && out_sat != nullptr, "null argument")) return rc;
  return guarded([&] { *out_sat = sata::brute_force_sat(f->f) ? 1 : 0; });
}

/* ---- definite logic programs ---- */

int sata_program_parse(const char* text, sata_program** out) {
  if (int rc = require(text != nullptr && out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = new sata_program{sata::parse_program(text)}; });
}

void sata_program_free(sata_program* p) { delete p; }

int sata_program_model(const sata_program* p, const char* facts_csv,
                       int max_width, char** out_names) {
  if (int rc = require(p != nullptr && out_names != nullptr, "null argument")) return rc;
  return guarded([&] {
    const sata::Interpretation facts =
        facts_csv == nullptr ? 0 : sata::parse_facts(p->p, facts_csv);
    const sata::Interpretation model =
        sata::model_via_diagram(p->p, facts, options_for(max_width));
    std::string joined;
    for (const std::string& name : sata::interpretation_names(p->p, model)) {
      if (!joined.empty()) joined += ' ';
      joined += name;
    }
    *out_names = copy_string(joined);
  });
}

int sata_program_equiv(const sata_program* p, const sata_program* q,
                       int max_width, int* out_equiv) {
  if (int rc = require(p != nullptr && q != nullptr && out_equiv != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out_equiv = sata::lp_equiv(p->p, q->p, options_for(max_width)) ? 1 : 0;
  });
}

/* ---- equational law suite ---- */

int sata_laws_run(int max_width, sata_law_report** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new sata_law_report{
        sata::verify_laws(sata::standard_generator_table(), options_for(max_width))};
  });
}

void sata_law_report_free(sata_law_report* r) { delete r; }

int sata_law_report_count(const sata_law_report* r) {
  return r == nullptr ? -1 : static_cast<int>(r->results.size());
}

const char* sata_law_report_name(const sata_law_report* r, int i) {
  if (r == nullptr || i < 0 || i >= static_cast<int>(r->results.size())) return nullptr;
  return r->results[static_cast<std::size_t>(i)].name.c_str();
}

int sata_law_report_holds(const sata_law_report* r, int i) {
  if (r == nullptr || i < 0 || i >= static_cast<int>(r->results.size())) return -1;
  return r->results[static_cast<std::size_t>(i)].holds ? 1 : 0;
}

const char* sata_law_report_detail(const sata_law_report* r, int i) {
  if (r == nullptr || i < 0 || i >= static_cast<int>(r->results.size())) return nullptr;
  return r->results[static_cast<std::size_t>(i)].detail.c_str();
}

}  // extern "C"
