#include "diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace sata {

namespace {

constexpr int kDom[kGenCount] = {1, 1, 2, 0, 2, 0, 1, 1};
constexpr int kCod[kGenCount] = {2, 0, 1, 1, 1, 1, 2, 0};
constexpr const char* kName[kGenCount] = {"copy",      "discard", "cocopy",
                                          "codiscard", "conj",    "unit",
                                          "coconj",    "counit"};

Diagram make_node(DiagramNode n) {
  return std::make_shared<const DiagramNode>(std::move(n));
}

}  // namespace

int gen_dom(Gen g) { return kDom[static_cast<int>(g)]; }
int gen_cod(Gen g) { return kCod[static_cast<int>(g)]; }
const char* gen_name(Gen g) { return kName[static_cast<int>(g)]; }

Diagram empty() {
  static const Diagram d = make_node({NodeKind::Empty, Gen::Copy, 0, nullptr, nullptr, 0, 0});
  return d;
}

Diagram gen(Gen g) {
  DiagramNode n{NodeKind::Generator, g, 0, nullptr, nullptr, gen_dom(g), gen_cod(g)};
  return make_node(std::move(n));
}

Diagram identity(int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "identity width must be >= 0, got ", k);
  if (k == 0) return empty();
  DiagramNode n{NodeKind::Identity, Gen::Copy, k, nullptr, nullptr, k, k};
  return make_node(std::move(n));
}

Diagram swap_wires() {
  static const Diagram d = make_node({NodeKind::Swap, Gen::Copy, 0, nullptr, nullptr, 2, 2});
  return d;
}

Diagram seq(const Diagram& a, const Diagram& b) {
  if (a->cod != b->dom) {
    fail(ErrorCode::Arity, "arity mismatch in sequential composition: left has ",
         a->cod, " output wires, right expects ", b->dom);
  }
  DiagramNode n{NodeKind::Seq, Gen::Copy, 0, a, b, a->dom, b->cod};
  return make_node(std::move(n));
}

Diagram par(const Diagram& a, const Diagram& b) {
  DiagramNode n{NodeKind::Par, Gen::Copy, 0, a, b, a->dom + b->dom, a->cod + b->cod};
  return make_node(std::move(n));
}

Diagram cup() { return seq(gen(Gen::Unit), gen(Gen::Coconj)); }
Diagram cap() { return seq(gen(Gen::Conj), gen(Gen::Counit)); }

namespace {

// Shared shape for the four fan constructions: a left-leaning tree that is the
// bare generator at arity 2 and the bare unit at arity 0.
Diagram merge_tree(int k, Gen binary, Gen nullary) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "tree arity must be >= 0, got ", k);
  if (k == 0) return gen(nullary);
  if (k == 1) return identity(1);
  if (k == 2) return gen(binary);
  return seq(par(merge_tree(k - 1, binary, nullary), identity(1)), gen(binary));
}

Diagram split_tree(int k, Gen binary, Gen nullary) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "tree arity must be >= 0, got ", k);
  if (k == 0) return gen(nullary);
  if (k == 1) return identity(1);
  if (k == 2) return gen(binary);
  return seq(gen(binary), par(split_tree(k - 1, binary, nullary), identity(1)));
}

}  // namespace

Diagram conj_tree(int k) { return merge_tree(k, Gen::Conj, Gen::Unit); }
Diagram copy_tree(int k) { return split_tree(k, Gen::Copy, Gen::Discard); }
Diagram cocopy_tree(int k) { return merge_tree(k, Gen::Cocopy, Gen::Codiscard); }
Diagram coconj_tree(int k) { return split_tree(k, Gen::Coconj, Gen::Counit); }

Diagram spider(int m, int n) { return seq(conj_tree(m), coconj_tree(n)); }

Diagram permutation_diagram(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::InvalidArgument, "not a bijection on 0..", n - 1);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  // Bubble-sort the arrangement by destination; each exchange becomes an
  // elementary crossing slice.
  std::vector<int> dest = perm;  // dest[p]: target position of the wire at p
  std::optional<Diagram> acc;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (dest[p] > dest[p + 1]) {
        std::swap(dest[p], dest[p + 1]);
        Diagram slice = swap_wires();
        if (p > 0) slice = par(identity(p), slice);
        if (p + 2 < n) slice = par(slice, identity(n - p - 2));
        acc = acc ? seq(*acc, slice) : slice;
        moved = true;
      }
    }
  }
  return acc ? *acc : identity(n);
}

Diagram swap_blocks(int k1, int k2) {
  if (k1 < 0 || k2 < 0) fail(ErrorCode::InvalidArgument, "block widths must be >= 0");
  std::vector<int> perm(static_cast<std::size_t>(k1 + k2));
  for (int i = 0; i < k1 + k2; ++i) {
    perm[static_cast<std::size_t>(i)] = i < k1 ? i + k2 : i - k1;
  }
  return permutation_diagram(perm);
}

bool diagram_equal(const Diagram& a, const Diagram& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->dom != b->dom || a->cod != b->cod) return false;
  switch (a->kind) {
    case NodeKind::Empty:
    case NodeKind::Swap:
      return true;
    case NodeKind::Identity:
      return a->width == b->width;
    case NodeKind::Generator:
      return a->gen == b->gen;
    case NodeKind::Seq:
    case NodeKind::Par:
      return diagram_equal(a->left, b->left) && diagram_equal(a->right, b->right);
  }
  return false;
}

int gen_count(const Diagram& d) {
  switch (d->kind) {
    case NodeKind::Generator:
      return 1;
    case NodeKind::Seq:
    case NodeKind::Par:
      return gen_count(d->left) + gen_count(d->right);
    default:
      return 0;
  }
}

namespace {

void flatten_into(const Diagram& d, int base, std::vector<Step>& out) {
  switch (d->kind) {
    case NodeKind::Empty:
    case NodeKind::Identity:
      return;
    case NodeKind::Swap:
      out.push_back(Step{true, Gen::Copy, base});
      return;
    case NodeKind::Generator:
      out.push_back(Step{false, d->gen, base});
      return;
    case NodeKind::Seq:
      flatten_into(d->left, base, out);
      flatten_into(d->right, base, out);
      return;
    case NodeKind::Par:
      // a (x) b == (a (x) id) ; (id (x) b): run a's slices with b's wires
      // untouched above, then b's slices above a's outputs.
      flatten_into(d->left, base, out);
      flatten_into(d->right, base + d->left->cod, out);
      return;
  }
}

}  // namespace

std::vector<Step> flatten_steps(const Diagram& d) {
  std::vector<Step> out;
  flatten_into(d, 0, out);
  return out;
}

// --- DSL parsing ---

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::Parse, "parse error at line ", line, ", column ", col, ": ", what);
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) advance();
    return text.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      error("expected a number");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) error("repetition count too large");
      advance();
    }
    return static_cast<int>(v);
  }

  Diagram atom() {
    skip_ws();
    if (pos >= text.size()) error("expected a diagram");
    if (eat('(')) {
      Diagram d = sequence();
      if (!eat(')')) error("expected ')'");
      return d;
    }
    const std::string w = word();
    if (w.empty()) error(std::string("unexpected character '") + text[pos] + "'");
    if (w == "id") {
      if (eat('^')) return identity(number());
      return identity(1);
    }
    if (w == "swap") return swap_wires();
    for (int g = 0; g < kGenCount; ++g) {
      if (w == kName[g]) return gen(static_cast<Gen>(g));
    }
    error("unknown generator '" + w + "'");
  }

  Diagram tensor() {
    Diagram d = atom();
    while (eat('*')) d = par(d, atom());
    return d;
  }

  Diagram sequence() {
    Diagram d = tensor();
    while (eat(';')) d = seq(d, tensor());
    return d;
  }

  Diagram parse() {
    skip_ws();
    if (pos == text.size()) return empty();  // blank text denotes the 0 -> 0 diagram
    Diagram d = sequence();
    skip_ws();
    if (pos != text.size()) error("trailing input");
    return d;
  }
};

void emit_sd_into(const Diagram& d, std::ostringstream& os, bool rhs_of_seq,
                  bool inside_par, bool rhs_of_par) {
  const bool need_parens =
      (d->kind == NodeKind::Seq && (rhs_of_seq || inside_par)) ||
      (d->kind == NodeKind::Par && rhs_of_par);
  if (need_parens) os << '(';
  switch (d->kind) {
    case NodeKind::Empty:
      os << "id^0";
      break;
    case NodeKind::Identity:
      if (d->width == 1) {
        os << "id";
      } else {
        os << "id^" << d->width;
      }
      break;
    case NodeKind::Swap:
      os << "swap";
      break;
    case NodeKind::Generator:
      os << gen_name(d->gen);
      break;
    case NodeKind::Seq:
      emit_sd_into(d->left, os, false, false, false);
      os << " ; ";
      emit_sd_into(d->right, os, true, false, false);
      break;
    case NodeKind::Par:
      emit_sd_into(d->left, os, false, true, false);
      os << " * ";
      emit_sd_into(d->right, os, false, true, true);
      break;
  }
  if (need_parens) os << ')';
}

}  // namespace

Diagram parse_sd(const std::string& text) {
  Parser p(text);
  return p.parse();
}

std::string emit_sd(const Diagram& d) {
  std::ostringstream os;
  emit_sd_into(d, os, false, false, false);
  return os.str();
}

namespace {

nlohmann::ordered_json json_of(const Diagram& d) {
  nlohmann::ordered_json j;
  switch (d->kind) {
    case NodeKind::Empty:
      j["op"] = "id";
      j["width"] = 0;
      break;
    case NodeKind::Identity:
      j["op"] = "id";
      j["width"] = d->width;
      break;
    case NodeKind::Swap:
      j["op"] = "swap";
      break;
    case NodeKind::Generator:
      j["op"] = "gen";
      j["gen"] = gen_name(d->gen);
      break;
    case NodeKind::Seq:
      j["op"] = "seq";
      break;
    case NodeKind::Par:
      j["op"] = "par";
      break;
  }
  j["dom"] = d->dom;
  j["cod"] = d->cod;
  if (d->kind == NodeKind::Seq || d->kind == NodeKind::Par) {
    j["left"] = json_of(d->left);
    j["right"] = json_of(d->right);
  }
  return j;
}

}  // namespace

std::string emit_json(const Diagram& d) { return json_of(d).dump(); }

std::string emit_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n  rankdir=LR;\n  node [shape=box];\n";
  // Wire sources: boundary inputs, then generator outputs as slices fire.
  std::vector<std::string> wire(static_cast<std::size_t>(d->dom));
  for (int i = 0; i < d->dom; ++i) {
    os << "  in" << i << " [shape=point, xlabel=\"x" << i << "\"];\n";
    wire[static_cast<std::size_t>(i)] = "in" + std::to_string(i);
  }
  int next_id = 0;
  for (const Step& s : flatten_steps(d)) {
    const std::size_t b = static_cast<std::size_t>(s.base);
    if (s.is_swap) {
      std::swap(wire[b], wire[b + 1]);
      continue;
    }
    const std::string id = "g" + std::to_string(next_id++);
    os << "  " << id << " [label=\"" << gen_name(s.g) << "\"];\n";
    const int din = gen_dom(s.g), dout = gen_cod(s.g);
    for (int j = 0; j < din; ++j) {
      os << "  " << wire[b + static_cast<std::size_t>(j)] << " -> " << id << ";\n";
    }
    wire.erase(wire.begin() + static_cast<std::ptrdiff_t>(b),
               wire.begin() + static_cast<std::ptrdiff_t>(b) + din);
    wire.insert(wire.begin() + static_cast<std::ptrdiff_t>(b),
                static_cast<std::size_t>(dout), id);
  }
  for (int i = 0; i < d->cod; ++i) {
    os << "  out" << i << " [shape=point, xlabel=\"y" << i << "\"];\n";
    os << "  " << wire[static_cast<std::size_t>(i)] << " -> out" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sata
