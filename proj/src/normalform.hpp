#pragma once

#include "interpret.hpp"

namespace sata {

// A downward-closed subset of the m-wire Boolean tuples, as a dense membership
// table over 2^m points (point x at bit x).
struct Downset {
  int m = 0;
  BitTable members;

  Downset() : members(make_table(0)) {}
  Downset(int m_, BitTable bits) : m(m_), members(std::move(bits)) {}
  bool contains(std::uint64_t x) const { return get_bit(members, x); }

  friend bool operator==(const Downset& a, const Downset& b) {
    return a.m == b.m && a.members == b.members;
  }
};

// Validates downward closure (every one-bit lowering of a member is a member);
// reports a witness point on failure.
Downset make_downset(int m, BitTable bits);

// Clauses are sets of wire indices, packed as bit masks. Canonical clause
// order is lexicographic on the sorted index sequence, so the empty clause
// comes first and {0, 2} precedes {1}.
bool clause_less(std::uint64_t a, std::uint64_t b);

// The minimal points of the complement of d, in canonical clause order. These
// are exactly the maximal-strength clauses: x is in d iff no clause is a
// subset of x.
std::vector<std::uint64_t> minimal_clauses(const Downset& d);

// Inverse direction: the downset {x | no clause c with c subset of x}.
Downset downset_of_clauses(int m, const std::vector<std::uint64_t>& clauses);

// All downsets of the m-wire tuples (exponential; intended for m <= 4).
std::vector<Downset> enumerate_downsets(int m);

// The m -> 0 diagram asserting every clause: a copy fan-out per wire, a
// wire-major to clause-major rewiring, then a conj tree capped by counit per
// clause. Stages that would be identities are omitted.
Diagram clause_diagram(int m, const std::vector<std::uint64_t>& clauses);

// Canonical representative of a diagram's equivalence class: the clause form
// of the bent relation, with the output wires bent back up. Two diagrams are
// semantically equal iff their normal forms are structurally equal.
Diagram normal_form(const Diagram& d, const Options& opt = {});

// Semantic equality / containment of equally-typed diagrams. decide_eq runs
// both the normal-form route and the direct interpretation route and insists
// they agree.
bool decide_eq(const Diagram& a, const Diagram& b, const Options& opt = {});
bool decide_leq(const Diagram& a, const Diagram& b, const Options& opt = {});

}  // namespace sata
