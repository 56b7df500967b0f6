#include "normalform.hpp"

#include <algorithm>
#include <bit>

namespace sata {

Downset make_downset(int m, BitTable bits) {
  if (bits.size() != table_words(m)) {
    fail(ErrorCode::WidthMismatch, "downset table has ", bits.size(),
         " words, expected ", table_words(m), " for ", m, " wires");
  }
  if (m < 6 && (bits[0] >> (std::uint64_t{1} << m)) != 0) {
    fail(ErrorCode::InvalidArgument, "downset table has bits set beyond point ",
         (std::uint64_t{1} << m) - 1);
  }
  Downset d(m, std::move(bits));
  const std::uint64_t lim = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < lim; ++x) {
    if (!d.contains(x)) continue;
    for (int i = 0; i < m; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((x & bit) && !d.contains(x & ~bit)) {
        fail(ErrorCode::NotDownwardClosed, "set contains ", x, " but not ",
             x & ~bit);
      }
    }
  }
  return d;
}

bool clause_less(std::uint64_t a, std::uint64_t b) {
  // Lexicographic on sorted index sequences; a strict prefix comes first.
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<std::uint64_t> minimal_clauses(const Downset& d) {
  std::vector<std::uint64_t> out;
  const std::uint64_t lim = std::uint64_t{1} << d.m;
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (d.contains(c)) continue;
    bool minimal = true;
    for (int i = 0; i < d.m && minimal; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((c & bit) && !d.contains(c & ~bit)) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), clause_less);
  return out;
}

Downset downset_of_clauses(int m, const std::vector<std::uint64_t>& clauses) {
  Downset d(m, make_table(m));
  const std::uint64_t lim = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < lim; ++x) {
    bool excluded = false;
    for (std::uint64_t c : clauses) {
      if ((c & ~x) == 0) {  // clause is a subset of x
        excluded = true;
        break;
      }
    }
    if (!excluded) set_bit(d.members, x);
  }
  return d;
}

std::vector<Downset> enumerate_downsets(int m) {
  if (m < 0 || m > 4) {
    fail(ErrorCode::InvalidArgument, "downset enumeration supports 0..4 wires, got ", m);
  }
  const std::uint64_t points = std::uint64_t{1} << m;
  std::vector<Downset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points); ++mask) {
    bool closed = true;
    for (std::uint64_t x = 0; x < points && closed; ++x) {
      if (!((mask >> x) & 1u)) continue;
      for (int i = 0; i < m && closed; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((x & bit) && !((mask >> (x & ~bit)) & 1u)) closed = false;
      }
    }
    if (closed) {
      Downset d(m, make_table(m));
      d.members[0] = mask;
      out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

// Tensor a into the chain, treating the empty diagram as the unit.
Diagram spar(const Diagram& a, const Diagram& b) {
  if (a->kind == NodeKind::Empty) return b;
  if (b->kind == NodeKind::Empty) return a;
  return par(a, b);
}

}  // namespace

Diagram clause_diagram(int m, const std::vector<std::uint64_t>& clauses) {
  for (std::uint64_t c : clauses) {
    if (m < 64 && (c >> m) != 0) {
      fail(ErrorCode::InvalidArgument, "clause mentions a wire >= ", m);
    }
  }
  // Occurrence counts per wire, and positions: wire-major order enumerates
  // wire 0's occurrences (by clause index), then wire 1's, ...; clause-major
  // order enumerates clause 0's wires ascending, then clause 1's, ...
  std::vector<int> count(static_cast<std::size_t>(m), 0);
  for (std::uint64_t c : clauses) {
    for (int i = 0; i < m; ++i) {
      if ((c >> i) & 1u) ++count[static_cast<std::size_t>(i)];
    }
  }
  std::vector<int> wire_major_start(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    wire_major_start[static_cast<std::size_t>(i) + 1] =
        wire_major_start[static_cast<std::size_t>(i)] + count[static_cast<std::size_t>(i)];
  }
  const int total = wire_major_start[static_cast<std::size_t>(m)];

  std::vector<int> perm(static_cast<std::size_t>(total));
  {
    std::vector<int> next = wire_major_start;  // next unused slot per wire
    next.pop_back();
    int clause_major_pos = 0;
    for (std::uint64_t c : clauses) {
      for (int i = 0; i < m; ++i) {
        if ((c >> i) & 1u) {
          perm[static_cast<std::size_t>(next[static_cast<std::size_t>(i)]++)] =
              clause_major_pos++;
        }
      }
    }
  }

  std::vector<Diagram> stages;
  bool fanout_trivial = true;
  for (int i = 0; i < m; ++i) {
    if (count[static_cast<std::size_t>(i)] != 1) fanout_trivial = false;
  }
  if (!fanout_trivial) {
    Diagram fan = empty();
    for (int i = 0; i < m; ++i) {
      fan = spar(fan, copy_tree(count[static_cast<std::size_t>(i)]));
    }
    stages.push_back(fan);
  }
  bool perm_trivial = true;
  for (int p = 0; p < total; ++p) {
    if (perm[static_cast<std::size_t>(p)] != p) perm_trivial = false;
  }
  if (!perm_trivial) stages.push_back(permutation_diagram(perm));
  if (!clauses.empty()) {
    Diagram caps = empty();
    for (std::uint64_t c : clauses) {
      const int k = std::popcount(c);
      const Diagram one =
          k == 1 ? gen(Gen::Counit) : seq(conj_tree(k), gen(Gen::Counit));
      caps = spar(caps, one);
    }
    stages.push_back(caps);
  }

  if (stages.empty()) return identity(m);
  Diagram acc = stages[0];
  for (std::size_t i = 1; i < stages.size(); ++i) acc = seq(acc, stages[i]);
  return acc;
}

namespace {

// Reintroduces n output wires on an (m+n) -> 0 diagram through bent wires:
// the result relates (x, y) iff e relates (x, complement of y) to the empty
// tuple. Monotonicity of e makes the bent pairs behave as pure negation.
Diagram unbend(const Diagram& e, int m, int n) {
  if (n == 0) return e;
  Diagram acc = spar(identity(m), [&] {
    Diagram cups = empty();
    for (int i = 0; i < n; ++i) cups = spar(cups, cup());
    return cups;
  }());
  // Cups emit pairs (t_i, y_i) interleaved; route the t wires to e's tail
  // inputs and keep the y wires below.
  std::vector<int> sigma(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    sigma[static_cast<std::size_t>(2 * i)] = i;
    sigma[static_cast<std::size_t>(2 * i + 1)] = n + i;
  }
  bool trivial = true;
  for (int p = 0; p < 2 * n; ++p) {
    if (sigma[static_cast<std::size_t>(p)] != p) trivial = false;
  }
  if (!trivial) acc = seq(acc, spar(identity(m), permutation_diagram(sigma)));
  return seq(acc, spar(e, identity(n)));
}

}  // namespace

Diagram normal_form(const Diagram& d, const Options& opt) {
  const MonRel r = interpret(d, opt);
  const int m = r.m, n = r.n;
  // Bend the outputs up as inputs, negating them: the bent set is downward
  // closed exactly because r is monotone.
  Downset bent(m + n, make_table(m + n));
  const std::uint64_t xlim = std::uint64_t{1} << m;
  const std::uint64_t ylim = std::uint64_t{1} << n;
  const std::uint64_t ymask = ylim - 1;
  for (std::uint64_t x = 0; x < xlim; ++x) {
    for (std::uint64_t t = 0; t < ylim; ++t) {
      if (r.contains(x, (~t) & ymask)) set_bit(bent.members, x | (t << m));
    }
  }
  const std::vector<std::uint64_t> clauses = minimal_clauses(bent);
  return unbend(clause_diagram(m + n, clauses), m, n);
}

bool decide_eq(const Diagram& a, const Diagram& b, const Options& opt) {
  if (a->dom != b->dom || a->cod != b->cod) {
    fail(ErrorCode::Arity, "cannot compare a ", a->dom, " -> ", a->cod,
         " diagram with a ", b->dom, " -> ", b->cod, " diagram");
  }
  const bool by_rel = rel_equal(interpret(a, opt), interpret(b, opt));
  const bool by_nf = diagram_equal(normal_form(a, opt), normal_form(b, opt));
  if (by_rel != by_nf) {
    fail(ErrorCode::Internal,
         "normal-form equality and relational equality disagree");
  }
  return by_rel;
}

bool decide_leq(const Diagram& a, const Diagram& b, const Options& opt) {
  if (a->dom != b->dom || a->cod != b->cod) {
    fail(ErrorCode::Arity, "cannot compare a ", a->dom, " -> ", a->cod,
         " diagram with a ", b->dom, " -> ", b->cod, " diagram");
  }
  return rel_leq(interpret(a, opt), interpret(b, opt));
}

}  // namespace sata
