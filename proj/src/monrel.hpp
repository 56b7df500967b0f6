#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace sata {

// Evaluation limits shared by every operation that materializes a relation
// table. max_width caps the number of address bits (input wires + output
// wires) of any single table; 24 address bits equals a 2 MiB table.
struct Options {
  int max_width = 24;
  static constexpr int kHardMin = 1;
  static constexpr int kHardMax = 30;
};

void check_width_cap(int bits_needed, const Options& opt, const char* what);

// A relation R between m-wire inputs and n-wire outputs over the Booleans,
// stored densely: entry (x, y) lives at table index (x << n) | y, and wire i
// of a tuple is bit i of its word.
struct MonRel {
  int m = 0;
  int n = 0;
  BitTable bits;  // 2^(m+n) entries

  MonRel() : bits(make_table(0)) {}
  MonRel(int m_, int n_) : m(m_), n(n_), bits(make_table(m_ + n_)) {}

  bool contains(std::uint64_t x, std::uint64_t y) const {
    return get_bit(bits, (x << n) | y);
  }
  void insert(std::uint64_t x, std::uint64_t y) { set_bit(bits, (x << n) | y); }
  std::uint64_t size() const;  // number of pairs

  friend bool operator==(const MonRel& a, const MonRel& b) {
    return a.m == b.m && a.n == b.n && a.bits == b.bits;
  }
};

// A monotone total function f : B^m -> B^n, tabulated (table[x] = f(x)).
struct MonFunc {
  int m = 0;
  int n = 0;
  std::vector<std::uint64_t> table;  // 2^m entries
};

// --- constructors ---

// {(x, y) | x <= y pointwise}; the identity for sequential composition.
MonRel rel_identity(int k, const Options& opt = {});
// {((x1, x2), (y1, y2)) | x1 <= y2 and x2 <= y1} on k1 + k2 wires.
MonRel rel_symmetry(int k1, int k2, const Options& opt = {});
MonRel rel_total(int m, int n, const Options& opt = {});
MonRel rel_empty(int m, int n, const Options& opt = {});
// Builds a relation from explicit pairs and verifies monotonicity; reports a
// witness pair on failure.
MonRel rel_from_pairs(int m, int n,
                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                      const Options& opt = {});
// {(x, y) | f(x) <= y}, the monotone relation determined by f.
MonRel rel_graph_of(const MonFunc& f, const Options& opt = {});

// --- algebra ---

// Relational composition a ; b (shared middle width must agree).
MonRel rel_seq(const MonRel& a, const MonRel& b, const Options& opt = {});
// Parallel (tensor) product: a's wires first, then b's.
MonRel rel_par(const MonRel& a, const MonRel& b, const Options& opt = {});
// Containment and equality of relations of equal type.
bool rel_leq(const MonRel& a, const MonRel& b);
bool rel_equal(const MonRel& a, const MonRel& b);

// --- predicates ---

// True when R is closed under lowering inputs and raising outputs.
bool is_monotone(const MonRel& r);
// Validates a raw dense table (word count must match 2^(m+n) entries).
bool is_monotone(int m, int n, const std::vector<std::uint64_t>& raw_bits);
// True when the diagram-denoted relation r equals {(x, y) | f(x) <= y}.
bool represents(const MonRel& r, const MonFunc& f);

// --- serialization ---

// JSON object {"m": .., "n": .., "pairs": [["x bits", "y bits"], ..]} with
// bit strings written wire 0 first and pairs in ascending (x, y) order.
std::string emit_monrel_json(const MonRel& r);

}  // namespace sata
