#pragma once

#include <string>
#include <vector>

#include "normalform.hpp"

namespace sata {

// One CNF clause over variables 0..n-1: pos holds the positive literals,
// neg the negated ones, as bit masks.
struct CnfClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  friend bool operator==(const CnfClause& a, const CnfClause& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<CnfClause> clauses;
};

// DIMACS reader/writer. An empty file is the empty formula; otherwise a
// `p cnf <vars> <clauses>` header is required and the clause count must match.
CnfFormula parse_dimacs(const std::string& text);
std::string emit_dimacs(const CnfFormula& f);

bool is_tautological(const CnfClause& c);

// Truth-table check, for cross-validation (num_vars <= 24).
bool brute_force_sat(const CnfFormula& f);

// A 0/1 matrix with up to 62 columns, one bit mask per row.
struct BoolMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> row_masks;
};

// black(A): cols -> rows, denoting {(x, v) | for every row i:
// AND of x_j over the 1-entries of row i  <=  v_i}. Built as copy fan-outs,
// a column-major to row-major rewiring, and conj trees; identity stages are
// omitted.
Diagram black_diagram(const BoolMatrix& a);
// white(A): rows -> cols, denoting {(u, y) | for every row i:
// u_i <= OR of y_j over the 1-entries of row i}. Mirror construction with
// coconj trees and cocopy fan-ins.
Diagram white_diagram(const BoolMatrix& a);

// Occurrence matrices of a formula: row j of `neg` (resp. `pos`) marks the
// variables appearing negated (resp. plain) in clause j.
BoolMatrix negative_matrix(const CnfFormula& f);
BoolMatrix positive_matrix(const CnfFormula& f);

// Closed diagram (0 -> 0) whose denotation is the one-point relation iff the
// formula is satisfiable: bent variable wires feed the negative occurrences
// through black structure into the positive occurrences through white
// structure, and close up again.
Diagram sat_diagram(const CnfFormula& f);

// Decides satisfiability by evaluating sat_diagram.
bool sat_via_diagram(const CnfFormula& f, const Options& opt = {});

// Resolution on a designated variable: clause i must contain v positively,
// clause j negatively. Returns the formula with the resolvent appended;
// the model set over the same variables is unchanged.
CnfFormula resolve(const CnfFormula& f, std::size_t i, std::size_t j, int v);

// One Davis-Putnam elimination round: drops tautological clauses on v, keeps
// clauses not mentioning v, and appends all non-tautological resolvents in
// (positive clause, negative clause) index order, deduplicating first-wins.
// The result is equisatisfiable with the input.
CnfFormula dp_eliminate(const CnfFormula& f, int v);

}  // namespace sata
