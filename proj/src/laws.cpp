#include "laws.hpp"

#include <sstream>

namespace sata {

namespace {

std::string bit_string(std::uint64_t v, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((v >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

// First pair on which the two relations disagree, for failure reports.
std::string first_difference(const MonRel& a, const MonRel& b) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.m); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << a.n); ++y) {
      if (a.contains(x, y) != b.contains(x, y)) {
        std::ostringstream os;
        os << "differs at x=" << bit_string(x, a.m) << " y=" << bit_string(y, a.n)
           << " (lhs " << (a.contains(x, y) ? "has" : "lacks") << " the pair)";
        return os.str();
      }
    }
  }
  return "relations agree";
}

struct Suite {
  const GeneratorTable& table;
  const Options& opt;
  std::vector<LawResult> results;

  MonRel eval(const Diagram& d) { return interpret_with_table(d, table, opt); }

  void equal(const std::string& name, const Diagram& lhs, const Diagram& rhs) {
    const MonRel a = eval(lhs), b = eval(rhs);
    if (rel_equal(a, b)) {
      results.push_back({name, true, ""});
    } else {
      results.push_back({name, false, first_difference(a, b)});
    }
  }

  void lower(const std::string& name, const Diagram& lhs, const Diagram& rhs) {
    const MonRel a = eval(lhs), b = eval(rhs);
    if (rel_leq(a, b)) {
      results.push_back({name, true, ""});
    } else {
      results.push_back({name, false, "inclusion fails: " + first_difference(a, b)});
    }
  }
};

Diagram tensor_power(const Diagram& d, int k) {
  Diagram acc = empty();
  for (int i = 0; i < k; ++i) acc = i == 0 ? d : par(acc, d);
  return acc;
}

// id (x) swap (x) id on four wires.
Diagram middle_swap4() {
  return par(identity(1), par(swap_wires(), identity(1)));
}

}  // namespace

bool verify_equation(const Diagram& lhs, const Diagram& rhs, const Options& opt) {
  if (lhs->dom != rhs->dom || lhs->cod != rhs->cod) {
    fail(ErrorCode::Arity, "cannot compare a ", lhs->dom, " -> ", lhs->cod,
         " diagram with a ", rhs->dom, " -> ", rhs->cod, " diagram");
  }
  return rel_equal(interpret(lhs, opt), interpret(rhs, opt));
}

std::vector<LawResult> verify_laws(const GeneratorTable& table, const Options& opt) {
  Suite s{table, opt, {}};
  const Diagram id1 = identity(1);
  const Diagram sw = swap_wires();
  const Diagram copy = gen(Gen::Copy), discard = gen(Gen::Discard);
  const Diagram cocopy = gen(Gen::Cocopy), codiscard = gen(Gen::Codiscard);
  const Diagram conj = gen(Gen::Conj), unit = gen(Gen::Unit);
  const Diagram coconj = gen(Gen::Coconj), counit = gen(Gen::Counit);

  // Copy/discard: commutative comonoid.
  s.equal("copy-coassociative", seq(copy, par(copy, id1)), seq(copy, par(id1, copy)));
  s.equal("copy-counit-left", seq(copy, par(discard, id1)), id1);
  s.equal("copy-counit-right", seq(copy, par(id1, discard)), id1);
  s.equal("copy-commutative", seq(copy, sw), copy);

  // Cocopy/codiscard: commutative monoid.
  s.equal("cocopy-associative", seq(par(cocopy, id1), cocopy), seq(par(id1, cocopy), cocopy));
  s.equal("cocopy-unit-left", seq(par(codiscard, id1), cocopy), id1);
  s.equal("cocopy-unit-right", seq(par(id1, codiscard), cocopy), id1);
  s.equal("cocopy-commutative", seq(sw, cocopy), cocopy);

  // Conj/unit: commutative monoid.
  s.equal("conj-associative", seq(par(conj, id1), conj), seq(par(id1, conj), conj));
  s.equal("conj-unit-left", seq(par(unit, id1), conj), id1);
  s.equal("conj-unit-right", seq(par(id1, unit), conj), id1);
  s.equal("conj-commutative", seq(sw, conj), conj);

  // Coconj/counit: commutative comonoid.
  s.equal("coconj-coassociative", seq(coconj, par(coconj, id1)), seq(coconj, par(id1, coconj)));
  s.equal("coconj-counit-left", seq(coconj, par(counit, id1)), id1);
  s.equal("coconj-counit-right", seq(coconj, par(id1, counit)), id1);
  s.equal("coconj-cocommutative", seq(coconj, sw), coconj);

  // The white pair is Frobenius.
  s.equal("conj-coconj-frobenius-left", seq(par(coconj, id1), par(id1, conj)), seq(conj, coconj));
  s.equal("conj-coconj-frobenius-right", seq(par(id1, coconj), par(conj, id1)), seq(conj, coconj));

  // Bimonoid: (conj, unit) against (copy, discard).
  s.equal("conj-copy-bimonoid", seq(conj, copy),
          seq(seq(par(copy, copy), middle_swap4()), par(conj, conj)));
  s.equal("unit-copy-bimonoid", seq(unit, copy), par(unit, unit));
  s.equal("conj-discard-bimonoid", seq(conj, discard), par(discard, discard));
  s.equal("unit-discard-bimonoid", seq(unit, discard), empty());

  // Bimonoid: (cocopy, codiscard) against (coconj, counit).
  s.equal("cocopy-coconj-bimonoid", seq(cocopy, coconj),
          seq(seq(par(coconj, coconj), middle_swap4()), par(cocopy, cocopy)));
  s.equal("codiscard-coconj-bimonoid", seq(codiscard, coconj), par(codiscard, codiscard));
  s.equal("cocopy-counit-bimonoid", seq(cocopy, counit), par(counit, counit));
  s.equal("codiscard-counit-bimonoid", seq(codiscard, counit), empty());

  // Bimonoid: (cocopy, codiscard) against (copy, discard).
  s.equal("cocopy-copy-bimonoid", seq(cocopy, copy),
          seq(seq(par(copy, copy), middle_swap4()), par(cocopy, cocopy)));
  s.equal("codiscard-copy-bimonoid", seq(codiscard, copy), par(codiscard, codiscard));
  s.equal("cocopy-discard-bimonoid", seq(cocopy, discard), par(discard, discard));
  s.equal("codiscard-discard-bimonoid", seq(codiscard, discard), empty());

  // Six adjunctions: for f -| g, both id <= f;g and g;f <= id.
  const auto adjunction = [&](const std::string& name, const Diagram& f, const Diagram& g) {
    s.lower("adjunction-" + name + "-lower", identity(f->dom), seq(f, g));
    s.lower("adjunction-" + name + "-upper", seq(g, f), identity(g->dom));
  };
  adjunction("conj-copy", conj, copy);
  adjunction("copy-cocopy", copy, cocopy);
  adjunction("cocopy-coconj", cocopy, coconj);
  adjunction("unit-discard", unit, discard);
  adjunction("discard-codiscard", discard, codiscard);
  adjunction("codiscard-counit", codiscard, counit);

  // Three adjunction composites that collapse to the identity wire.
  s.equal("copy-conj-retraction", seq(copy, conj), id1);
  s.equal("copy-cocopy-retraction", seq(copy, cocopy), id1);
  s.equal("coconj-cocopy-retraction", seq(coconj, cocopy), id1);

  // A unit of one colour pushed through the other colour's structure.
  s.equal("unit-into-cocopy", seq(par(unit, id1), cocopy), seq(discard, unit));
  s.equal("copy-into-counit", seq(copy, par(counit, id1)), seq(counit, codiscard));
  s.equal("codiscard-into-conj", seq(par(codiscard, id1), conj), seq(discard, codiscard));
  s.equal("coconj-into-discard", seq(coconj, par(discard, id1)), seq(discard, codiscard));

  // Compact structure: bent wires cancel, and the circle is the empty diagram.
  s.equal("snake-right", seq(par(cup(), id1), par(id1, cap())), id1);
  s.equal("snake-left", seq(par(id1, cup()), par(cap(), id1)), id1);
  s.equal("circle-is-empty-diagram", seq(cup(), cap()), empty());

  // Feedback around one leg of a white node yields the always-true relation.
  s.equal("loop-collapse", seq(coconj, conj), seq(discard, codiscard));
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const Diagram d = spider(m + 1, n + 1);
      const Diagram traced =
          seq(seq(par(cup(), identity(m)), par(identity(1), d)), par(cap(), identity(n)));
      const Diagram total = seq(tensor_power(discard, m), tensor_power(codiscard, n));
      s.equal("spider-trace-total-" + std::to_string(m) + "-" + std::to_string(n),
              traced, total);
    }
  }

  // Conjunction distributes over disjunction.
  s.equal("conj-distributes-over-coconj", seq(conj, coconj),
          seq(seq(par(copy, coconj), middle_swap4()), par(conj, conj)));

  // Generalized bialgebra: an m-ary merge into an n-ary split rewrites to
  // splits, a grid transposition, then merges. Three generator pairings.
  struct Scheme {
    const char* name;
    Diagram (*merge)(int);
    Diagram (*split)(int);
  };
  const Scheme schemes[] = {
      {"conj-copy", conj_tree, copy_tree},
      {"cocopy-copy", cocopy_tree, copy_tree},
      {"cocopy-coconj", cocopy_tree, coconj_tree},
  };
  for (const Scheme& sc : schemes) {
    bool all = true;
    std::string detail;
    int instances = 0;
    for (int k = 0; k <= 3 && all; ++k) {
      for (int n = 0; n <= 3 && all; ++n) {
        const Diagram lhs = seq(sc.merge(k), sc.split(n));
        std::vector<int> transpose(static_cast<std::size_t>(k * n));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < n; ++j) {
            transpose[static_cast<std::size_t>(i * n + j)] = j * k + i;
          }
        }
        const Diagram rhs = seq(seq(tensor_power(sc.split(n), k),
                                    permutation_diagram(transpose)),
                                tensor_power(sc.merge(k), n));
        const MonRel a = s.eval(lhs), b = s.eval(rhs);
        ++instances;
        if (!rel_equal(a, b)) {
          all = false;
          detail = "fails at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   ": " + first_difference(a, b);
        }
      }
    }
    if (all) detail = "all " + std::to_string(instances) + " instances hold";
    s.results.push_back({std::string("generalized-bialgebra-") + sc.name, all, detail});
  }

  // Spider fusion: two white nodes joined on one wire fuse into one.
  {
    bool all = true;
    std::string detail;
    int instances = 0;
    for (int m = 0; m <= 3 && all; ++m) {
      for (int n = 0; n <= 3 && all; ++n) {
        for (int k = 0; k <= 3 && all; ++k) {
          for (int kp = 0; kp <= 3 && all; ++kp) {
            const Diagram lhs = seq(par(spider(m, k + 1), identity(kp)),
                                    par(identity(k), spider(1 + kp, n)));
            const Diagram rhs = spider(m + kp, k + n);
            const MonRel a = s.eval(lhs), b = s.eval(rhs);
            ++instances;
            if (!rel_equal(a, b)) {
              all = false;
              detail = "fails at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " k'=" + std::to_string(kp) + ": " +
                       first_difference(a, b);
            }
          }
        }
      }
    }
    if (all) detail = "all " + std::to_string(instances) + " instances hold";
    s.results.push_back({"spider-fusion", all, detail});
  }

  return std::move(s.results);
}

}  // namespace sata
