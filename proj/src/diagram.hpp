#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sata {

// The eight generating boxes of the calculus. Black structure duplicates and
// merges wires; white structure is conjunction/disjunction with their units.
enum class Gen {
  Copy,       // 1 -> 2
  Discard,    // 1 -> 0
  Cocopy,     // 2 -> 1
  Codiscard,  // 0 -> 1
  Conj,       // 2 -> 1
  Unit,       // 0 -> 1
  Coconj,     // 1 -> 2
  Counit,     // 1 -> 0
};

constexpr int kGenCount = 8;
int gen_dom(Gen g);
int gen_cod(Gen g);
const char* gen_name(Gen g);

struct DiagramNode;
// Diagrams are immutable shared trees; copies are cheap handle copies.
using Diagram = std::shared_ptr<const DiagramNode>;

enum class NodeKind { Empty, Identity, Swap, Generator, Seq, Par };

struct DiagramNode {
  NodeKind kind;
  Gen gen = Gen::Copy;     // Generator nodes
  int width = 0;           // Identity nodes: number of parallel wires (>= 1)
  Diagram left, right;     // Seq / Par children
  int dom = 0, cod = 0;    // cached wire counts
};

// --- constructors (arity-checked) ---

Diagram empty();             // the 0 -> 0 diagram
Diagram gen(Gen g);
Diagram identity(int k);     // k parallel wires; identity(0) == empty()
Diagram swap_wires();        // the elementary 2 -> 2 crossing
Diagram seq(const Diagram& a, const Diagram& b);  // requires cod(a) == dom(b)
Diagram par(const Diagram& a, const Diagram& b);

// --- derived constructions ---

Diagram cup();               // 0 -> 2: unit ; coconj
Diagram cap();               // 2 -> 0: conj ; counit
Diagram conj_tree(int k);    // k -> 1 left-leaning tree (0 -> unit, 2 -> conj)
Diagram copy_tree(int k);    // 1 -> k (0 -> discard, 2 -> copy)
Diagram cocopy_tree(int k);  // k -> 1 (0 -> codiscard, 2 -> cocopy)
Diagram coconj_tree(int k);  // 1 -> k (0 -> counit, 2 -> coconj)
Diagram spider(int m, int n);  // m -> n: conj_tree(m) ; coconj_tree(n)
// Wiring that routes input position i to output position perm[i], built from
// elementary crossings; perm must be a bijection on 0..perm.size()-1.
Diagram permutation_diagram(const std::vector<int>& perm);
// k1 + k2 -> k2 + k1, crossing the first block over the second.
Diagram swap_blocks(int k1, int k2);

inline int dom(const Diagram& d) { return d->dom; }
inline int cod(const Diagram& d) { return d->cod; }

// Structural (syntactic) equality of terms.
bool diagram_equal(const Diagram& a, const Diagram& b);
// Number of generator occurrences.
int gen_count(const Diagram& d);

// --- slice decomposition ---

// One elementary slice of a diagram: a single generator or crossing applied at
// wire offset `base`, identity elsewhere. Sequencing all steps in order
// reproduces the diagram (identity wires contribute no steps).
struct Step {
  bool is_swap = false;
  Gen g = Gen::Copy;
  int base = 0;
};
std::vector<Step> flatten_steps(const Diagram& d);

// --- text formats ---

// Term DSL: generator names, `id`, `id^n`, `swap`, infix `;` (lowest
// precedence) and `*`, both left-associative, with parentheses.
Diagram parse_sd(const std::string& text);
std::string emit_sd(const Diagram& d);
// JSON term tree with explicit dom/cod on every node.
std::string emit_json(const Diagram& d);
// GraphViz rendering: one node per generator occurrence, wires left-to-right.
std::string emit_dot(const Diagram& d);

}  // namespace sata
