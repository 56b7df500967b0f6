#pragma once

#include <string>
#include <vector>

#include "interpret.hpp"

namespace sata {

struct LawResult {
  std::string name;
  bool holds = false;
  std::string detail;  // instance count, or a counterexample description
};

// Checks the full equational theory semantically: the monoid/comonoid blocks
// for both colours, the Frobenius pair, the three bimonoid interactions, the
// six adjunctions, compact-closure (snakes, circle), and the derived laws
// (retractions, loop collapse, distributivity, cross-colour units, traced
// spiders, generalized bialgebra schemes, spider fusion). Generator meanings
// come from `table` so deliberately perturbed semantics are detectable.
std::vector<LawResult> verify_laws(const GeneratorTable& table = standard_generator_table(),
                                   const Options& opt = {});

// True iff both diagrams have equal types and equal denotations.
bool verify_equation(const Diagram& lhs, const Diagram& rhs, const Options& opt = {});

}  // namespace sata
