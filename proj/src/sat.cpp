#include "sat.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace sata {

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  CnfClause current;
  bool in_clause = false;
  int line = 1;

  std::size_t i = 0;
  const auto skip_line = [&] {
    while (i < text.size() && text[i] != '\n') ++i;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == 'c') {
      skip_line();
      continue;
    }
    if (ch == 'p') {
      if (have_header) fail(ErrorCode::Parse, "line ", line, ": duplicate header");
      std::size_t end = i;
      while (end < text.size() && text[end] != '\n') ++end;
      std::istringstream hs(text.substr(i, end - i));
      std::string p, fmt;
      if (!(hs >> p >> fmt >> f.num_vars >> declared_clauses) || p != "p" ||
          fmt != "cnf" || f.num_vars < 0 || declared_clauses < 0) {
        fail(ErrorCode::Parse, "line ", line, ": malformed header, expected 'p cnf <vars> <clauses>'");
      }
      if (f.num_vars > 60) {
        fail(ErrorCode::InvalidArgument, "formula has ", f.num_vars,
             " variables; at most 60 are supported");
      }
      have_header = true;
      i = end;
      continue;
    }
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      if (!have_header) {
        fail(ErrorCode::Parse, "line ", line, ": clause before 'p cnf' header");
      }
      bool negative = false;
      if (ch == '-') {
        negative = true;
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
          fail(ErrorCode::Parse, "line ", line, ": stray '-'");
        }
      }
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) fail(ErrorCode::Parse, "line ", line, ": literal too large");
        ++i;
      }
      if (v == 0) {
        if (negative) fail(ErrorCode::Parse, "line ", line, ": literal -0");
        f.clauses.push_back(current);
        current = CnfClause{};
        in_clause = false;
        continue;
      }
      if (v > f.num_vars) {
        fail(ErrorCode::InvalidArgument, "line ", line, ": variable ", v,
             " out of range 1..", f.num_vars);
      }
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (negative) {
        current.neg |= bit;
      } else {
        current.pos |= bit;
      }
      in_clause = true;
      continue;
    }
    fail(ErrorCode::Parse, "line ", line, ": unexpected character '", ch, "'");
  }
  if (in_clause) fail(ErrorCode::Parse, "last clause is not terminated by 0");
  if (have_header && static_cast<int>(f.clauses.size()) != declared_clauses) {
    fail(ErrorCode::Parse, "header declares ", declared_clauses, " clauses but ",
         f.clauses.size(), " were given");
  }
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const CnfClause& c : f.clauses) {
    for (int v = 0; v < f.num_vars; ++v) {
      if ((c.neg >> v) & 1u) os << '-' << (v + 1) << ' ';
    }
    for (int v = 0; v < f.num_vars; ++v) {
      if ((c.pos >> v) & 1u) os << (v + 1) << ' ';
    }
    os << "0\n";
  }
  return os.str();
}

bool is_tautological(const CnfClause& c) { return (c.pos & c.neg) != 0; }

bool brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > 24) {
    fail(ErrorCode::InvalidArgument, "brute-force check limited to 24 variables, got ",
         f.num_vars);
  }
  const std::uint64_t lim = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t x = 0; x < lim; ++x) {
    bool ok = true;
    for (const CnfClause& c : f.clauses) {
      if ((x & c.pos) == 0 && (~x & c.neg) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

void check_matrix(const BoolMatrix& a) {
  if (a.rows < 0 || a.cols < 0 || a.cols > 62 ||
      a.row_masks.size() != static_cast<std::size_t>(a.rows)) {
    fail(ErrorCode::InvalidArgument, "malformed matrix: ", a.rows, " rows, ",
         a.cols, " cols, ", a.row_masks.size(), " row masks");
  }
  for (std::uint64_t r : a.row_masks) {
    if (a.cols < 62 && (r >> a.cols) != 0) {
      fail(ErrorCode::InvalidArgument, "matrix row mentions a column >= ", a.cols);
    }
  }
}

// Positions of the 1-entries counted column-by-column (column-major) and
// row-by-row (row-major); the two layers of a matrix diagram are wired by the
// permutation between these orders.
struct MatrixWiring {
  std::vector<int> col_counts, row_counts;
  std::vector<int> col_to_row;  // permutation, column-major index -> row-major index
};

MatrixWiring matrix_wiring(const BoolMatrix& a) {
  MatrixWiring w;
  w.col_counts.assign(static_cast<std::size_t>(a.cols), 0);
  w.row_counts.assign(static_cast<std::size_t>(a.rows), 0);
  for (int i = 0; i < a.rows; ++i) {
    w.row_counts[static_cast<std::size_t>(i)] =
        std::popcount(a.row_masks[static_cast<std::size_t>(i)]);
    for (int j = 0; j < a.cols; ++j) {
      if ((a.row_masks[static_cast<std::size_t>(i)] >> j) & 1u) {
        ++w.col_counts[static_cast<std::size_t>(j)];
      }
    }
  }
  std::vector<int> row_major_start(static_cast<std::size_t>(a.rows) + 1, 0);
  for (int i = 0; i < a.rows; ++i) {
    row_major_start[static_cast<std::size_t>(i) + 1] =
        row_major_start[static_cast<std::size_t>(i)] + w.row_counts[static_cast<std::size_t>(i)];
  }
  std::vector<int> next = row_major_start;  // next free row-major slot per row
  next.pop_back();
  // Column-major enumeration: column j ascending, rows within it ascending.
  for (int j = 0; j < a.cols; ++j) {
    for (int i = 0; i < a.rows; ++i) {
      if ((a.row_masks[static_cast<std::size_t>(i)] >> j) & 1u) {
        w.col_to_row.push_back(next[static_cast<std::size_t>(i)]++);
      }
    }
  }
  return w;
}

Diagram spar(const Diagram& a, const Diagram& b) {
  if (a->kind == NodeKind::Empty) return b;
  if (b->kind == NodeKind::Empty) return a;
  return par(a, b);
}

Diagram fan_layer(const std::vector<int>& counts, Diagram (*tree)(int)) {
  Diagram acc = empty();
  for (int k : counts) acc = spar(acc, tree(k));
  return acc;
}

bool all_ones(const std::vector<int>& counts) {
  for (int k : counts) {
    if (k != 1) return false;
  }
  return true;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Diagram compose_stages(const std::vector<Diagram>& stages, int width_if_empty) {
  if (stages.empty()) return identity(width_if_empty);
  Diagram acc = stages[0];
  for (std::size_t i = 1; i < stages.size(); ++i) acc = seq(acc, stages[i]);
  return acc;
}

}  // namespace

Diagram black_diagram(const BoolMatrix& a) {
  check_matrix(a);
  const MatrixWiring w = matrix_wiring(a);
  std::vector<Diagram> stages;
  if (!all_ones(w.col_counts)) stages.push_back(fan_layer(w.col_counts, copy_tree));
  if (!is_identity_perm(w.col_to_row)) stages.push_back(permutation_diagram(w.col_to_row));
  if (!all_ones(w.row_counts)) stages.push_back(fan_layer(w.row_counts, conj_tree));
  return compose_stages(stages, a.cols);
}

Diagram white_diagram(const BoolMatrix& a) {
  check_matrix(a);
  const MatrixWiring w = matrix_wiring(a);
  // Mirror of the black construction: rows split into occurrences, which are
  // routed row-major -> column-major, then merged per column.
  std::vector<int> row_to_col(w.col_to_row.size());
  for (std::size_t p = 0; p < w.col_to_row.size(); ++p) {
    row_to_col[static_cast<std::size_t>(w.col_to_row[p])] = static_cast<int>(p);
  }
  std::vector<Diagram> stages;
  if (!all_ones(w.row_counts)) stages.push_back(fan_layer(w.row_counts, coconj_tree));
  if (!is_identity_perm(row_to_col)) stages.push_back(permutation_diagram(row_to_col));
  if (!all_ones(w.col_counts)) stages.push_back(fan_layer(w.col_counts, cocopy_tree));
  return compose_stages(stages, a.rows);
}

BoolMatrix negative_matrix(const CnfFormula& f) {
  BoolMatrix a;
  a.rows = static_cast<int>(f.clauses.size());
  a.cols = f.num_vars;
  for (const CnfClause& c : f.clauses) a.row_masks.push_back(c.neg);
  return a;
}

BoolMatrix positive_matrix(const CnfFormula& f) {
  BoolMatrix a;
  a.rows = static_cast<int>(f.clauses.size());
  a.cols = f.num_vars;
  for (const CnfClause& c : f.clauses) a.row_masks.push_back(c.pos);
  return a;
}

Diagram sat_diagram(const CnfFormula& f) {
  const int n = f.num_vars;
  Diagram cups = empty();
  for (int i = 0; i < n; ++i) cups = spar(cups, cup());
  Diagram caps = empty();
  for (int i = 0; i < n; ++i) caps = spar(caps, cap());

  // Cup legs come out interleaved; split them into a bundle that will carry
  // the negated sides and a bundle for the plain sides.
  std::vector<int> deinterleave(static_cast<std::size_t>(2 * n));
  std::vector<int> interleave(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    deinterleave[static_cast<std::size_t>(2 * i)] = i;
    deinterleave[static_cast<std::size_t>(2 * i + 1)] = n + i;
    interleave[static_cast<std::size_t>(i)] = 2 * i;
    interleave[static_cast<std::size_t>(n + i)] = 2 * i + 1;
  }

  Diagram d = cups;
  if (!is_identity_perm(deinterleave)) d = seq(d, permutation_diagram(deinterleave));
  d = seq(d, spar(identity(n), black_diagram(negative_matrix(f))));
  d = seq(d, spar(identity(n), white_diagram(positive_matrix(f))));
  if (!is_identity_perm(interleave)) d = seq(d, permutation_diagram(interleave));
  return seq(d, caps);
}

bool sat_via_diagram(const CnfFormula& f, const Options& opt) {
  const MonRel r = interpret(sat_diagram(f), opt);
  return r.contains(0, 0);
}

CnfFormula resolve(const CnfFormula& f, std::size_t i, std::size_t j, int v) {
  if (i >= f.clauses.size() || j >= f.clauses.size()) {
    fail(ErrorCode::InvalidArgument, "clause index out of range");
  }
  if (v < 0 || v >= f.num_vars) {
    fail(ErrorCode::InvalidArgument, "variable ", v, " out of range 0..", f.num_vars - 1);
  }
  const std::uint64_t bit = std::uint64_t{1} << v;
  const CnfClause& ci = f.clauses[i];
  const CnfClause& cj = f.clauses[j];
  if ((ci.pos & bit) == 0 || (cj.neg & bit) == 0) {
    fail(ErrorCode::InvalidArgument,
         "resolution requires the variable positive in the first clause and negative in the second");
  }
  CnfClause r;
  r.pos = (ci.pos & ~bit) | cj.pos;
  r.neg = ci.neg | (cj.neg & ~bit);
  CnfFormula out = f;
  out.clauses.push_back(r);
  return out;
}

CnfFormula dp_eliminate(const CnfFormula& f, int v) {
  if (v < 0 || v >= f.num_vars) {
    fail(ErrorCode::InvalidArgument, "variable ", v, " out of range 0..", f.num_vars - 1);
  }
  const std::uint64_t bit = std::uint64_t{1} << v;
  std::vector<std::size_t> pos_idx, neg_idx;
  CnfFormula out;
  out.num_vars = f.num_vars;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const CnfClause& c = f.clauses[i];
    const bool p = (c.pos & bit) != 0, q = (c.neg & bit) != 0;
    if (p && q) continue;  // tautological on v: always satisfied
    if (p) {
      pos_idx.push_back(i);
    } else if (q) {
      neg_idx.push_back(i);
    } else {
      out.clauses.push_back(c);
    }
  }
  for (std::size_t pi : pos_idx) {
    for (std::size_t ni : neg_idx) {
      CnfClause r;
      r.pos = (f.clauses[pi].pos & ~bit) | f.clauses[ni].pos;
      r.neg = f.clauses[pi].neg | (f.clauses[ni].neg & ~bit);
      if (!is_tautological(r)) out.clauses.push_back(r);
    }
  }
  // First occurrence wins.
  std::vector<CnfClause> unique;
  for (const CnfClause& c : out.clauses) {
    bool seen = false;
    for (const CnfClause& u : unique) {
      if (u == c) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(c);
  }
  out.clauses = std::move(unique);
  return out;
}

}  // namespace sata
