#include <gtest/gtest.h>

#include "support/example1.hpp"
#include "tptl/mtl.hpp"
#include "tptl/oracle.hpp"
#include "tptl/parser.hpp"

using namespace tptl;

TEST(Semantics, Example1IsFalse) {
  EXPECT_FALSE(eval_semantics(parse(tptl::testing::kExample1), tptl::testing::example1_trace(), 0));
}

TEST(Semantics, FreezeThenTest) {
  const auto t = tptl::testing::example1_trace();
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_TRUE(eval_semantics(parse("x.(x <= 0)"), t, i));
}

TEST(Semantics, FrozenSubformulaUnderEnvironment) {
  const auto t = tptl::testing::example1_trace();
  const Formula psi1 = parse("F (y <= 1 -> !b)");
  EXPECT_FALSE(eval_semantics(psi1, t, 4, {{"y", 1.1}}));
  EXPECT_TRUE(eval_semantics(psi1, t, 0, {{"y", 0.0}}));
}

TEST(Semantics, Clauses) {
  const TimedStateSequence t({{0.0, {"a"}}, {0.5, {"a"}}, {2.0, {"b"}}});
  EXPECT_TRUE(eval_semantics(parse("a U b"), t, 0));
  EXPECT_FALSE(eval_semantics(parse("a U (b /\\ a)"), t, 0));
  EXPECT_TRUE(eval_semantics(parse("X a"), t, 0));
  EXPECT_FALSE(eval_semantics(parse("X a"), t, 2));
  EXPECT_TRUE(eval_semantics(parse("x.F (b /\\ x >= 2)"), t, 0));
  EXPECT_FALSE(eval_semantics(parse("x.F (b /\\ x > 2)"), t, 0));
  EXPECT_TRUE(eval_semantics(parse("x.F (b /\\ x = 1.5)"), t, 1));
  EXPECT_TRUE(eval_semantics(parse("G (a \\/ b)"), t, 0));
  EXPECT_TRUE(eval_semantics(parse("b R (a \\/ b)"), t, 0));
  EXPECT_FALSE(eval_semantics(parse("b R a"), t, 0));
}

TEST(Semantics, UnboundVariableIsAnError) {
  const auto t = tptl::testing::example1_trace();
  EXPECT_THROW(eval_semantics(parse("x <= 1"), t, 0), UnboundVariableError);
  EXPECT_THROW(eval_semantics(parse("a"), t, 7), std::out_of_range);
}

TEST(Semantics, NonEncapsulatedFormulas) {
  // x measures from the first sample, y from the b sample.
  const TimedStateSequence t({{0.0, {"a"}}, {1.0, {"b"}}, {2.5, {"c"}}});
  EXPECT_TRUE(eval_semantics(parse("x.F (b /\\ y.F (c /\\ x >= 2.5 /\\ y <= 1.5))"), t, 0));
  EXPECT_FALSE(eval_semantics(parse("x.F (b /\\ y.F (c /\\ x >= 2.5 /\\ y < 1.5))"), t, 0));
}

TEST(Mtl, BoundedUntil) {
  const TimedStateSequence t({{0.0, {"a"}}, {0.5, {"a"}}, {1.5, {"b"}}});
  EXPECT_TRUE(eval_mtl(parse_mtl("a U[1,2] b"), t, 0));
  EXPECT_FALSE(eval_mtl(parse_mtl("a U[0,1] b"), t, 0));
  EXPECT_TRUE(eval_mtl(parse_mtl("a U b"), t, 0));
  EXPECT_TRUE(eval_mtl(parse_mtl("a U[0,inf] b"), t, 0));
  EXPECT_TRUE(eval_mtl(parse_mtl("F[1.5,1.5] b"), t, 0));
  EXPECT_TRUE(eval_mtl(parse_mtl("G[0,0.5] a"), t, 0));
  EXPECT_FALSE(eval_mtl(parse_mtl("G[0,1.5] a"), t, 0));
  EXPECT_TRUE(eval_mtl(parse_mtl("G[5,6] a"), t, 0));
}
