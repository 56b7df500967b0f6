#pragma once

#include <array>

#include "diagram.hpp"
#include "monrel.hpp"

namespace sata {

// The relation denoted by one generator:
//   copy      {(x, (y1, y2)) | x <= y1, x <= y2}    discard    all (x, ())
//   cocopy    {((x1, x2), y) | x1 <= y, x2 <= y}    codiscard  all ((), y)
//   conj      {((x1, x2), y) | x1 AND x2 <= y}      unit       {((), 1)}
//   coconj    {(x, (y1, y2)) | x <= y1 OR y2}       counit     {(0, ())}
MonRel rel_of_generator(Gen g);

// Replaceable assignment of meanings to generators, for cross-checking the
// evaluators against deliberately perturbed semantics.
using GeneratorTable = std::array<MonRel, kGenCount>;
const GeneratorTable& standard_generator_table();

// Evaluates a diagram to its relation by sweeping the slice decomposition
// over a single in-place bit table. Before any allocation, the full width
// trace is checked against opt.max_width; crossings are handled by address
// relabeling rather than table rewrites.
MonRel interpret(const Diagram& d, const Options& opt = {});

// Same sweep, but with generator meanings taken from the given table. Each
// entry must have that generator's arity (local relations over more than five
// wires do not fit the sweep's update kernel).
MonRel interpret_with_table(const Diagram& d, const GeneratorTable& table,
                            const Options& opt = {});

// Reference evaluator: structural recursion with explicit relation algebra
// (rel_seq / rel_par). Needs wider intermediate tables than the sweep, so it
// hits the width cap sooner; kept for differential testing.
MonRel interpret_reference(const Diagram& d, const GeneratorTable& table,
                           const Options& opt = {});

}  // namespace sata
