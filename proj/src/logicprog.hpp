#pragma once

#include <string>
#include <vector>

#include "normalform.hpp"

namespace sata {

// A definite clause: body atoms imply the head atom (facts have empty
// bodies). Atoms are indices into the owning program's atom list.
struct LogicClause {
  int head = 0;
  std::vector<int> body;
};

// A propositional definite logic program with a fixed, positional atom list;
// wire i of every program diagram is atom i.
struct LogicProgram {
  std::vector<std::string> atoms;
  std::vector<LogicClause> clauses;
};

// An interpretation: bit i set iff atom i is true.
using Interpretation = std::uint64_t;

// Program text: one clause per line, `head.` or `head :- b1, b2.`;
// `%` starts a comment; an optional single `%atoms: a,b,c` pragma fixes the
// atom order, otherwise atoms are numbered by first appearance.
LogicProgram parse_program(const std::string& text);
std::string emit_program(const LogicProgram& l);

// Index of a named atom, or an error naming the unknown atom.
int atom_index(const LogicProgram& l, const std::string& name);
// Parses a comma-separated atom list ("a,c") into an interpretation.
Interpretation parse_facts(const LogicProgram& l, const std::string& csv);
// Renders an interpretation as lexicographically sorted atom names.
std::vector<std::string> interpretation_names(const LogicProgram& l, Interpretation i);

// Heads whose bodies hold in i (facts always fire).
Interpretation immediate_consequence(const LogicProgram& l, Interpretation i);
// Least fixed point of j = i OR immediate_consequence(l, j), by iteration.
Interpretation consequence(const LogicProgram& l, Interpretation i);
// Least Herbrand model: consequence of the empty interpretation.
Interpretation herbrand(const LogicProgram& l);

// n -> n diagram representing immediate_consequence: copy fan-outs per atom's
// body occurrences, a rewiring, one conj tree per clause, a rewiring to head
// groups, and cocopy fan-ins per atom's head occurrences. Denotes
// {(i, j) | immediate_consequence(l, i) <= j}.
Diagram imcnsq_diagram(const LogicProgram& l);

// n -> n diagram denoting {(i, j) | consequence(l, i) <= j}: the input joins
// a feedback bundle, splits into an output branch and a body branch through
// the immediate-consequence diagram, and the feedback is closed with bent
// wires.
Diagram cnsq_diagram(const LogicProgram& l);

// 0 -> n diagram denoting the up-set {j | i <= j}: unit where the atom is
// true, codiscard where it is false.
Diagram interp_diagram(Interpretation i, int n);

// Minimum of the principal up-set denoted by a 0 -> n diagram; errors with
// NotPrincipal if the denotation is empty or has several minimal points.
Interpretation extract_interpretation(const Diagram& d, const Options& opt = {});

// Diagrammatic consequence computation; must agree with consequence().
Interpretation model_via_diagram(const LogicProgram& l, Interpretation i,
                                 const Options& opt = {});

// Semantic program equivalence (equal consequence operators). Requires the
// same atom list in the same order. Decides by diagram equality of the
// consequence diagrams and cross-checks against exhaustive evaluation of
// consequence() on all interpretations; the routes must agree.
bool lp_equiv(const LogicProgram& p, const LogicProgram& q, const Options& opt = {});

}  // namespace sata
