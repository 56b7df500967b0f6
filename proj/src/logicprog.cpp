#include "logicprog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sata {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct ProgramParser {
  LogicProgram prog;
  bool have_pragma = false;

  int intern(const std::string& name, int line) {
    for (std::size_t i = 0; i < prog.atoms.size(); ++i) {
      if (prog.atoms[i] == name) return static_cast<int>(i);
    }
    if (have_pragma) {
      fail(ErrorCode::Atom, "line ", line, ": atom '", name,
           "' is not listed in the %atoms: pragma");
    }
    if (prog.atoms.size() >= 60) {
      fail(ErrorCode::InvalidArgument, "programs are limited to 60 atoms");
    }
    prog.atoms.push_back(name);
    return static_cast<int>(prog.atoms.size()) - 1;
  }

  void parse_pragma(const std::string& body, int line) {
    if (have_pragma) fail(ErrorCode::Parse, "line ", line, ": duplicate %atoms: pragma");
    if (!prog.clauses.empty()) {
      fail(ErrorCode::Parse, "line ", line, ": %atoms: pragma must precede all clauses");
    }
    have_pragma = true;
    std::size_t i = 0;
    while (true) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i >= body.size()) break;
      if (!is_ident_start(body[i])) {
        fail(ErrorCode::Parse, "line ", line, ": expected an atom name in pragma");
      }
      std::size_t start = i;
      while (i < body.size() && is_ident_char(body[i])) ++i;
      const std::string name = body.substr(start, i - start);
      for (const std::string& a : prog.atoms) {
        if (a == name) fail(ErrorCode::Atom, "line ", line, ": duplicate atom '", name, "'");
      }
      prog.atoms.push_back(name);
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i < body.size()) {
        if (body[i] != ',') {
          fail(ErrorCode::Parse, "line ", line, ": expected ',' in pragma");
        }
        ++i;
      }
    }
    if (prog.atoms.size() > 60) {
      fail(ErrorCode::InvalidArgument, "programs are limited to 60 atoms");
    }
  }

  void parse_clause(const std::string& text, int line) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto ident = [&]() -> std::string {
      skip_ws();
      if (i >= text.size() || !is_ident_start(text[i])) {
        fail(ErrorCode::Parse, "line ", line, ": expected an atom name");
      }
      std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      return text.substr(start, i - start);
    };
    LogicClause c;
    c.head = intern(ident(), line);
    skip_ws();
    if (i + 1 < text.size() && text[i] == ':' && text[i + 1] == '-') {
      i += 2;
      while (true) {
        c.body.push_back(intern(ident(), line));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
    }
    skip_ws();
    if (i >= text.size() || text[i] != '.') {
      fail(ErrorCode::Parse, "line ", line, ": expected '.' at the end of the clause");
    }
    ++i;
    skip_ws();
    if (i != text.size()) {
      fail(ErrorCode::Parse, "line ", line, ": unexpected text after '.'");
    }
    prog.clauses.push_back(std::move(c));
  }
};

}  // namespace

LogicProgram parse_program(const std::string& text) {
  ProgramParser p;
  std::size_t pos = 0;
  int line = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string row = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    if (row.rfind("%atoms:", 0) == 0) {
      p.parse_pragma(row.substr(7), line);
      continue;
    }
    const std::size_t comment = row.find('%');
    if (comment != std::string::npos) row.erase(comment);
    bool blank = true;
    for (char c : row) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    p.parse_clause(row, line);
  }
  return std::move(p.prog);
}

std::string emit_program(const LogicProgram& l) {
  std::ostringstream os;
  os << "%atoms:";
  for (std::size_t i = 0; i < l.atoms.size(); ++i) {
    os << (i == 0 ? " " : ",") << l.atoms[i];
  }
  os << '\n';
  for (const LogicClause& c : l.clauses) {
    os << l.atoms[static_cast<std::size_t>(c.head)];
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      os << (i == 0 ? " :- " : ", ") << l.atoms[static_cast<std::size_t>(c.body[i])];
    }
    os << ".\n";
  }
  return os.str();
}

int atom_index(const LogicProgram& l, const std::string& name) {
  for (std::size_t i = 0; i < l.atoms.size(); ++i) {
    if (l.atoms[i] == name) return static_cast<int>(i);
  }
  fail(ErrorCode::Atom, "unknown atom '", name, "'");
}

Interpretation parse_facts(const LogicProgram& l, const std::string& csv) {
  Interpretation out = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string::npos) end = csv.size();
    std::string name = csv.substr(pos, end - pos);
    const auto strip = [](std::string s) {
      std::size_t a = 0, b = s.size();
      while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
      return s.substr(a, b - a);
    };
    name = strip(name);
    if (!name.empty()) out |= Interpretation{1} << atom_index(l, name);
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> interpretation_names(const LogicProgram& l, Interpretation i) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < l.atoms.size(); ++a) {
    if ((i >> a) & 1u) names.push_back(l.atoms[a]);
  }
  std::sort(names.begin(), names.end());
  return names;
}

Interpretation immediate_consequence(const LogicProgram& l, Interpretation i) {
  Interpretation out = 0;
  for (const LogicClause& c : l.clauses) {
    bool fires = true;
    for (int b : c.body) {
      if (!((i >> b) & 1u)) {
        fires = false;
        break;
      }
    }
    if (fires) out |= Interpretation{1} << c.head;
  }
  return out;
}

Interpretation consequence(const LogicProgram& l, Interpretation i) {
  Interpretation x = i;
  while (true) {
    const Interpretation next = x | immediate_consequence(l, x);
    if (next == x) return x;
    x = next;
  }
}

Interpretation herbrand(const LogicProgram& l) { return consequence(l, 0); }

namespace {

Diagram spar(const Diagram& a, const Diagram& b) {
  if (a->kind == NodeKind::Empty) return b;
  if (b->kind == NodeKind::Empty) return a;
  return par(a, b);
}

bool is_identity_perm(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool all_ones(const std::vector<int>& counts) {
  for (int k : counts) {
    if (k != 1) return false;
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

Diagram imcnsq_diagram(const LogicProgram& l) {
  const int n = static_cast<int>(l.atoms.size());
  const int k = static_cast<int>(l.clauses.size());

  // Occurrence bookkeeping: body occurrences per atom (fan-out) and head
  // occurrences per atom (fan-in).
  std::vector<int> body_count(static_cast<std::size_t>(n), 0);
  std::vector<int> head_count(static_cast<std::size_t>(n), 0);
  for (const LogicClause& c : l.clauses) {
    ++head_count[static_cast<std::size_t>(c.head)];
    for (int b : c.body) ++body_count[static_cast<std::size_t>(b)];
  }

  // Atom-major -> clause-major rewiring of body occurrences.
  std::vector<std::vector<int>> occ(static_cast<std::size_t>(n));
  {
    int clause_major = 0;
    for (const LogicClause& c : l.clauses) {
      for (int b : c.body) occ[static_cast<std::size_t>(b)].push_back(clause_major++);
    }
  }
  std::vector<int> sigma1;
  for (int a = 0; a < n; ++a) {
    for (int p : occ[static_cast<std::size_t>(a)]) sigma1.push_back(p);
  }

  // Clause order -> head-major rewiring of clause outputs.
  std::vector<int> head_start(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 0; a < n; ++a) {
    head_start[static_cast<std::size_t>(a) + 1] =
        head_start[static_cast<std::size_t>(a)] + head_count[static_cast<std::size_t>(a)];
  }
  std::vector<int> sigma2(static_cast<std::size_t>(k));
  {
    std::vector<int> next = head_start;
    next.pop_back();
    for (int j = 0; j < k; ++j) {
      const int h = l.clauses[static_cast<std::size_t>(j)].head;
      sigma2[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(h)]++;
    }
  }

  std::vector<Diagram> stages;
  if (!all_ones(body_count)) {
    Diagram fan = empty();
    for (int a = 0; a < n; ++a) {
      fan = spar(fan, copy_tree(body_count[static_cast<std::size_t>(a)]));
    }
    stages.push_back(fan);
  }
  if (!is_identity_perm(sigma1)) stages.push_back(permutation_diagram(sigma1));
  if (k > 0) {
    Diagram conjs = empty();
    for (const LogicClause& c : l.clauses) {
      conjs = spar(conjs, conj_tree(static_cast<int>(c.body.size())));
    }
    stages.push_back(conjs);
  }
  if (!is_identity_perm(sigma2)) stages.push_back(permutation_diagram(sigma2));
  if (!all_ones(head_count)) {
    Diagram fanin = empty();
    for (int a = 0; a < n; ++a) {
      fanin = spar(fanin, cocopy_tree(head_count[static_cast<std::size_t>(a)]));
    }
    stages.push_back(fanin);
  }
  return compose_stages(stages, n);
}

Diagram cnsq_diagram(const LogicProgram& l) {
  const int n = static_cast<int>(l.atoms.size());
  if (n == 0) return identity(0);

  // Feedback wiring: each atom gets a bent pair; the plain side joins the
  // input through cocopy, runs through the immediate-consequence block, and
  // is capped against the negated side.
  Diagram cups = empty();
  for (int i = 0; i < n; ++i) cups = spar(cups, cup());
  Diagram d = spar(identity(n), cups);  // [input (n) | leg pairs (2n)]

  // Route: input i -> 2i, second cup leg -> 2i+1 (join partners), first cup
  // leg -> 2n+i (kept for the final caps).
  std::vector<int> p1(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) {
    p1[static_cast<std::size_t>(i)] = 2 * i;
    p1[static_cast<std::size_t>(n + 2 * i)] = 2 * n + i;
    p1[static_cast<std::size_t>(n + 2 * i + 1)] = 2 * i + 1;
  }
  if (!is_identity_perm(p1)) d = seq(d, permutation_diagram(p1));

  Diagram joins = empty();
  for (int i = 0; i < n; ++i) joins = spar(joins, gen(Gen::Cocopy));
  d = seq(d, spar(joins, identity(n)));  // [joined (n) | kept legs (n)]

  Diagram splits = empty();
  for (int i = 0; i < n; ++i) splits = spar(splits, gen(Gen::Copy));
  d = seq(d, spar(splits, identity(n)));  // [split pairs (2n) | kept legs (n)]

  // Route: first copy of each pair -> output bundle, second -> body bundle.
  std::vector<int> p2(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) {
    p2[static_cast<std::size_t>(2 * i)] = i;
    p2[static_cast<std::size_t>(2 * i + 1)] = n + i;
    p2[static_cast<std::size_t>(2 * n + i)] = 2 * n + i;
  }
  if (!is_identity_perm(p2)) d = seq(d, permutation_diagram(p2));

  d = seq(d, spar(identity(n), spar(imcnsq_diagram(l), identity(n))));

  // Route: pair each consequence wire with its kept leg for the caps.
  std::vector<int> p3(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) {
    p3[static_cast<std::size_t>(i)] = i;
    p3[static_cast<std::size_t>(n + i)] = n + 2 * i;
    p3[static_cast<std::size_t>(2 * n + i)] = n + 2 * i + 1;
  }
  if (!is_identity_perm(p3)) d = seq(d, permutation_diagram(p3));

  Diagram caps = empty();
  for (int i = 0; i < n; ++i) caps = spar(caps, cap());
  return seq(d, spar(identity(n), caps));
}

Diagram interp_diagram(Interpretation i, int n) {
  if (n < 0 || (n < 64 && (i >> n) != 0)) {
    fail(ErrorCode::InvalidArgument, "interpretation mentions an atom >= ", n);
  }
  Diagram d = empty();
  for (int a = 0; a < n; ++a) {
    d = spar(d, gen(((i >> a) & 1u) ? Gen::Unit : Gen::Codiscard));
  }
  return d;
}

Interpretation extract_interpretation(const Diagram& d, const Options& opt) {
  if (d->dom != 0) {
    fail(ErrorCode::Arity, "expected a 0 -> n diagram, got ", d->dom, " -> ", d->cod);
  }
  const MonRel r = interpret(d, opt);
  const std::uint64_t lim = std::uint64_t{1} << r.n;
  bool any = false;
  std::uint64_t meet = lim - 1;
  for (std::uint64_t y = 0; y < lim; ++y) {
    if (r.contains(0, y)) {
      any = true;
      meet &= y;
    }
  }
  if (!any) {
    fail(ErrorCode::NotPrincipal, "denotation is empty, not a principal up-set");
  }
  if (!r.contains(0, meet)) {
    fail(ErrorCode::NotPrincipal,
         "denotation has several minimal points, not a principal up-set");
  }
  return meet;
}

Interpretation model_via_diagram(const LogicProgram& l, Interpretation i,
                                 const Options& opt) {
  const int n = static_cast<int>(l.atoms.size());
  return extract_interpretation(seq(interp_diagram(i, n), cnsq_diagram(l)), opt);
}

bool lp_equiv(const LogicProgram& p, const LogicProgram& q, const Options& opt) {
  if (p.atoms != q.atoms) {
    fail(ErrorCode::Atom,
         "programs must share the same atom list in the same order");
  }
  const bool by_diagram = decide_eq(cnsq_diagram(p), cnsq_diagram(q), opt);
  bool by_semantics = true;
  const int n = static_cast<int>(p.atoms.size());
  for (Interpretation i = 0; i < (Interpretation{1} << n); ++i) {
    if (consequence(p, i) != consequence(q, i)) {
      by_semantics = false;
      break;
    }
  }
  if (by_diagram != by_semantics) {
    fail(ErrorCode::Internal,
         "diagrammatic and exhaustive equivalence checks disagree");
  }
  return by_diagram;
}

}  // namespace sata
