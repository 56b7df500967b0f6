/* C interface to the string-diagram satisfiability library.
 *
 * Conventions:
 *   - Every fallible function returns a status code (SATA_OK on success) and
 *     writes its result through out-parameters.
 *   - On failure, sata_last_error() returns a thread-local message describing
 *     what went wrong in the failing call.
 *   - Objects are opaque; free them with their matching *_free function.
 *   - Strings written through char** out-parameters are owned by the caller
 *     and must be released with sata_string_free.
 *   - max_width caps the address bits (input + output wires) of any relation
 *     table materialized during evaluation; pass 0 for the default (24).
 */
#ifndef SATA_SATA_H
#define SATA_SATA_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SATA_OK = 0,
  SATA_ERR_PARSE = 1,            /* malformed input text */
  SATA_ERR_ARITY = 2,            /* diagram wire counts do not line up */
  SATA_ERR_WIDTH_MISMATCH = 3,   /* relation/table dimensions do not line up */
  SATA_ERR_WIDTH_CAP = 4,        /* evaluation exceeds max_width */
  SATA_ERR_NOT_MONOTONE = 5,     /* pair set violates monotonicity */
  SATA_ERR_NOT_DOWNWARD_CLOSED = 6,
  SATA_ERR_NOT_PRINCIPAL = 7,    /* up-set has no unique minimum */
  SATA_ERR_ATOM = 8,             /* unknown/duplicate/mismatched atom name */
  SATA_ERR_INVALID_ARGUMENT = 9,
  SATA_ERR_INTERNAL = 10
};

/* Thread-local message for the most recent failing call on this thread. */
const char* sata_last_error(void);
void sata_string_free(char* s);

/* ---- diagrams ---- */

typedef struct sata_diagram sata_diagram;

/* Parses the term DSL: generator names (copy, discard, cocopy, codiscard,
 * conj, unit, coconj, counit), id, id^n, swap, infix ';' and '*', parens. */
int sata_diagram_parse(const char* text, sata_diagram** out);
void sata_diagram_free(sata_diagram* d);
int sata_diagram_dom(const sata_diagram* d);
int sata_diagram_cod(const sata_diagram* d);
int sata_diagram_emit_text(const sata_diagram* d, char** out);
int sata_diagram_emit_json(const sata_diagram* d, char** out);
int sata_diagram_emit_dot(const sata_diagram* d, char** out);

/* Semantic equality / containment of equally-typed diagrams. */
int sata_diagram_equal(const sata_diagram* a, const sata_diagram* b,
                       int max_width, int* out);
int sata_diagram_leq(const sata_diagram* a, const sata_diagram* b,
                     int max_width, int* out);
/* Canonical clause-form representative of the diagram's semantic class. */
int sata_diagram_normal_form(const sata_diagram* d, int max_width,
                             sata_diagram** out);

/* ---- CNF satisfiability ---- */

typedef struct sata_cnf sata_cnf;

int sata_cnf_parse_dimacs(const char* text, sata_cnf** out);
void sata_cnf_free(sata_cnf* f);
int sata_cnf_num_vars(const sata_cnf* f);
int sata_cnf_num_clauses(const sata_cnf* f);
/* Satisfiability via the closed-diagram encoding (writes 1/0 to out_sat). */
int sata_cnf_sat_diagram(const sata_cnf* f, int max_width, int* out_sat);
/* Satisfiability via truth-table enumeration. */
int sata_cnf_sat_brute(const sata_cnf* f, int* out_sat);

/* ---- definite logic programs ---- */

typedef struct sata_program sata_program;

int sata_program_parse(const char* text, sata_program** out);
void sata_program_free(sata_program* p);
/* Consequence of the given facts ("a,c"; NULL or "" for none), computed
 * diagrammatically; writes the sorted atom names, space-separated. */
int sata_program_model(const sata_program* p, const char* facts_csv,
                       int max_width, char** out_names);
/* Equality of consequence operators (atom lists must match exactly). */
int sata_program_equiv(const sata_program* p, const sata_program* q,
                       int max_width, int* out_equiv);

/* ---- equational law suite ---- */

typedef struct sata_law_report sata_law_report;

int sata_laws_run(int max_width, sata_law_report** out);
void sata_law_report_free(sata_law_report* r);
int sata_law_report_count(const sata_law_report* r);
const char* sata_law_report_name(const sata_law_report* r, int i);
int sata_law_report_holds(const sata_law_report* r, int i);
const char* sata_law_report_detail(const sata_law_report* r, int i);

#ifdef __cplusplus
}
#endif

#endif /* SATA_SATA_H */
