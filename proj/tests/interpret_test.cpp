// The staircase evaluator, checked generator by generator against hand-written
// pair sets and differentially against the structural reference evaluator.
#include <cstdint>
#include <vector>

#include "diagram.hpp"
#include "doctest.h"
#include "interpret.hpp"
#include "monrel.hpp"
#include "testutil.hpp"

using namespace sata;
using sata::testing::Rng;

namespace {

MonRel pairs(int m, int n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ps) {
  return rel_from_pairs(m, n, ps);
}

}  // namespace

TEST_CASE("generator relations match their definitions exactly") {
  // copy: x flows into both outputs. Output bit 0 is y1, bit 1 is y2.
  CHECK(rel_equal(rel_of_generator(Gen::Copy),
                  pairs(1, 2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}})));
  // discard: total.
  CHECK(rel_equal(rel_of_generator(Gen::Discard), pairs(1, 0, {{0, 0}, {1, 0}})));
  // cocopy: both inputs flow into y.
  CHECK(rel_equal(rel_of_generator(Gen::Cocopy),
                  pairs(2, 1, {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}})));
  // codiscard: total.
  CHECK(rel_equal(rel_of_generator(Gen::Codiscard), pairs(0, 1, {{0, 0}, {0, 1}})));
  // conj: x1 AND x2 <= y.
  CHECK(rel_equal(rel_of_generator(Gen::Conj),
                  pairs(2, 1, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 1}})));
  // unit: output forced to 1.
  CHECK(rel_equal(rel_of_generator(Gen::Unit), pairs(0, 1, {{0, 1}})));
  // coconj: x <= y1 OR y2.
  CHECK(rel_equal(rel_of_generator(Gen::Coconj),
                  pairs(1, 2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}})));
  // counit: input forced to 0.
  CHECK(rel_equal(rel_of_generator(Gen::Counit), pairs(1, 0, {{0, 0}})));
}

TEST_CASE("interpret handles the structural diagrams") {
  CHECK(rel_equal(interpret(identity(3)), rel_identity(3)));
  CHECK(rel_equal(interpret(swap_wires()), rel_symmetry(1, 1)));
  const MonRel point = interpret(empty());
  CHECK(point.m == 0);
  CHECK(point.n == 0);
  CHECK(point.contains(0, 0));  // the unique 0 -> 0 pair is present
}

TEST_CASE("interpret evaluates each bare generator") {
  for (int g = 0; g < kGenCount; ++g) {
    CHECK(rel_equal(interpret(gen(static_cast<Gen>(g))), rel_of_generator(static_cast<Gen>(g))));
  }
}

TEST_CASE("cups demand at least one high output; caps forbid two high inputs") {
  const MonRel c = interpret(cup());
  CHECK(c.m == 0);
  CHECK(c.n == 2);
  CHECK(!c.contains(0, 0));
  CHECK(c.contains(0, 1));
  CHECK(c.contains(0, 2));
  CHECK(c.contains(0, 3));
  const MonRel k = interpret(cap());
  CHECK(k.contains(0, 0));
  CHECK(k.contains(1, 0));
  CHECK(k.contains(2, 0));
  CHECK(!k.contains(3, 0));
}

TEST_CASE("the two closed scalars are the point and the empty relation") {
  const MonRel point = interpret(empty());
  CHECK(point.contains(0, 0));
  const MonRel zero = interpret(seq(gen(Gen::Unit), gen(Gen::Counit)));
  CHECK(!zero.contains(0, 0));
  const MonRel circle = interpret(seq(cup(), cap()));
  CHECK(circle.contains(0, 0));  // the closed loop equals the point, not zero
}

TEST_CASE("permutation diagrams denote the relation of the wire shuffle") {
  const std::vector<std::vector<int>> perms = {
      {0}, {1, 0}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 3, 2}};
  for (const auto& p : perms) {
    const int n = static_cast<int>(p.size());
    const MonRel r = interpret(permutation_diagram(p));
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        bool want = true;
        for (int i = 0; i < n && want; ++i) {
          const bool xi = (x >> i) & 1;
          const bool yi = (y >> p[static_cast<std::size_t>(i)]) & 1;
          if (xi && !yi) want = false;  // wire value must not decrease
        }
        CHECK(r.contains(x, y) == want);
      }
    }
  }
}

TEST_CASE("interpret is functorial: composition and tensor map to rel_seq and rel_par") {
  Rng rng(2001);
  for (int rep = 0; rep < 80; ++rep) {
    const int m = sata::testing::rand_int(rng, 0, 2);
    const Diagram a = sata::testing::random_staircase(rng, m, 3, 5);
    const Diagram b = sata::testing::random_staircase(rng, a->cod, 3, 5);
    CHECK(rel_equal(interpret(seq(a, b)), rel_seq(interpret(a), interpret(b))));
    const Diagram c = sata::testing::random_staircase(rng, sata::testing::rand_int(rng, 0, 2), 3, 4);
    CHECK(rel_equal(interpret(par(a, c)), rel_par(interpret(a), interpret(c))));
  }
}

TEST_CASE("sliding a box along a tensor does not change the relation") {
  Rng rng(2002);
  for (int rep = 0; rep < 40; ++rep) {
    const int m1 = sata::testing::rand_int(rng, 0, 2);
    const int m2 = sata::testing::rand_int(rng, 0, 2);
    const Diagram a = sata::testing::random_staircase(rng, m1, 3, 4);
    const Diagram b = sata::testing::random_staircase(rng, m2, 3, 4);
    const Diagram lhs = seq(par(a, identity(m2)), par(identity(a->cod), b));
    const Diagram rhs = seq(par(identity(m1), b), par(a, identity(b->cod)));
    CHECK(rel_equal(interpret(lhs), interpret(par(a, b))));
    CHECK(rel_equal(interpret(lhs), interpret(rhs)));
  }
}

TEST_CASE("the staircase evaluator agrees with the structural reference") {
  Rng rng(2003);
  for (int rep = 0; rep < 300; ++rep) {
    const int m = sata::testing::rand_int(rng, 0, 3);
    const Diagram d = sata::testing::random_staircase(rng, m, 4, 12);
    const MonRel fast = interpret(d);
    const MonRel slow = interpret_reference(d, standard_generator_table());
    CHECK(rel_equal(fast, slow));
  }
}

TEST_CASE("interpret results are always monotone relations") {
  Rng rng(2004);
  for (int rep = 0; rep < 100; ++rep) {
    const Diagram d = sata::testing::random_staircase(rng, sata::testing::rand_int(rng, 0, 3), 4, 10);
    CHECK(is_monotone(interpret(d)));
  }
}

TEST_CASE("the width cap is checked before evaluation") {
  Options tight;
  tight.max_width = 2;
  CHECK_NOTHROW(interpret(identity(1), tight));  // peak 2 bits
  bool caught = false;
  try {
    interpret(identity(2), tight);  // peak 4 bits
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code == ErrorCode::WidthCap);
  }
  CHECK(caught);
  // copy: starts at 2 bits (identity on one wire), peaks at 3 bits.
  Options three;
  three.max_width = 3;
  CHECK_NOTHROW(interpret(gen(Gen::Copy), three));
  Options two;
  two.max_width = 2;
  CHECK_THROWS_AS(interpret(gen(Gen::Copy), two), Error);
}

TEST_CASE("interpret_with_table honours a substituted generator meaning") {
  GeneratorTable table = standard_generator_table();
  // Give conj the meaning of disjunction: x1 OR x2 <= y.
  MonRel disj{2, 1};
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t y = 0; y < 2; ++y) {
      if ((((x | (x >> 1)) & 1) & ~y) == 0) disj.insert(x, y);
    }
  }
  table[static_cast<int>(Gen::Conj)] = disj;
  const Diagram d = gen(Gen::Conj);
  CHECK(rel_equal(interpret_with_table(d, table), disj));
  CHECK(!rel_equal(interpret_with_table(d, table), rel_of_generator(Gen::Conj)));
  CHECK(rel_equal(interpret_reference(d, table), disj));

  // Both table-driven evaluators agree on a compound diagram too.
  const Diagram compound = seq(gen(Gen::Copy), par(gen(Gen::Discard), identity(1)));
  CHECK(rel_equal(interpret_with_table(compound, table),
                  interpret_reference(compound, table)));

  // A table entry with the wrong arity is rejected up front.
  GeneratorTable bad = standard_generator_table();
  bad[static_cast<int>(Gen::Unit)] = rel_of_generator(Gen::Copy);
  CHECK_THROWS_AS(interpret_with_table(d, bad), Error);
}
