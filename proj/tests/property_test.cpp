#include <gtest/gtest.h>

#include "support/checks.hpp"
#include "tptl/analysis.hpp"

using namespace tptl;
using namespace tptl::testing;

TEST(Property, MonitorAgreesWithSemantics) {
  const auto r = differential(101, 2000);
  EXPECT_EQ(r.failure, "");
  EXPECT_EQ(r.bound_failure, "");
}

TEST(Property, FreezeRowsMatchFrozenSubformulas) { EXPECT_EQ(loop_invariant(202, 300), ""); }

TEST(Property, MtlEmbedding) { EXPECT_EQ(mtl_embedding(303, 300), ""); }

TEST(Property, DerivedOperatorRules) {
  for (Op op : {Op::Eventually, Op::Always, Op::Release, Op::Implies}) {
    EXPECT_EQ(derived_equivalence(op, 404 + static_cast<int>(op), 300), "") << static_cast<int>(op);
  }
}

TEST(Property, ConstraintRowsEndAtZero) {
  FormulaGenerator gen(505);
  std::mt19937_64 rng(505);
  MonitorOptions opts;
  opts.keep_table = true;
  for (int c = 0; c < 500; ++c) {
    const IndexedFormula f = index_subformulas(gen.next());
    const auto t = random_trace(rng);
    const Verdict v = monitor(f, t, opts);
    for (const auto& n : f.nodes()) {
      if (n.op != Op::Constraint) continue;
      for (std::size_t u = 0; u < t.size(); ++u) {
        EXPECT_EQ(*v.snapshot->table.cell(n.index, u), compare(0.0, n.relation, n.bound));
      }
    }
  }
}

TEST(Property, EveryCellSetAfterRun) {
  FormulaGenerator gen(606);
  std::mt19937_64 rng(606);
  MonitorOptions opts;
  opts.keep_table = true;
  opts.strict_reads = true;
  for (int c = 0; c < 500; ++c) {
    const IndexedFormula f = index_subformulas(gen.next());
    const auto t = random_trace(rng);
    const Verdict v = monitor(f, t, opts);
    for (int j = 1; j <= static_cast<int>(f.size()); ++j) {
      for (std::size_t u = 0; u < t.size(); ++u) EXPECT_TRUE(v.snapshot->table.is_set(j, u));
    }
  }
}

TEST(Property, LeafRowsNeverChange) {
  FormulaGenerator gen(707);
  std::mt19937_64 rng(707);
  MonitorOptions opts;
  opts.keep_table = true;
  for (int c = 0; c < 300; ++c) {
    const IndexedFormula f = index_subformulas(gen.next());
    const auto t = random_trace(rng);
    const Verdict v = monitor(f, t, opts);
    MonitoringTable init(f.size(), t.size());
    initialize_table(init, f, t);
    for (const auto& n : f.nodes()) {
      if (n.op != Op::Prop && n.op != Op::True) continue;
      for (std::size_t u = 0; u < t.size(); ++u) {
        EXPECT_EQ(v.snapshot->table.cell(n.index, u), init.cell(n.index, u));
      }
    }
  }
}

TEST(Property, EnvironmentIrrelevantForClosedFormulas) {
  FormulaGenerator gen(808);
  std::mt19937_64 rng(808);
  for (int c = 0; c < 500; ++c) {
    const Formula f = gen.next_closed();
    const auto t = random_trace(rng, 8);
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
    EXPECT_EQ(eval_semantics(f, t, i), eval_semantics(f, t, i, {{"x", 7.5}, {"y", 0.25}, {"z", 3.0}}))
        << to_string(f);
  }
}

TEST(Property, AlphaRenamePreservesMeaning) {
  FormulaGenerator gen(909);
  std::mt19937_64 rng(909);
  for (int c = 0; c < 500; ++c) {
    const Formula f = gen.next_closed();
    const auto t = random_trace(rng, 8);
    EXPECT_EQ(eval_semantics(f, t, 0), eval_semantics(alpha_rename(f), t, 0)) << to_string(f);
  }
}

TEST(Property, ColumnRestrictionDuringInstantiation) {
  FormulaGenerator gen(1010);
  std::mt19937_64 rng(1010);
  for (int c = 0; c < 200; ++c) {
    const IndexedFormula f = index_subformulas(gen.next());
    if (f.subtrees().empty()) continue;
    const auto t = random_trace(rng);
    const FrozenSubtree& theta = f.subtrees().front();
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
    MonitoringTable m(f.size(), t.size());
    initialize_table(m, f, t);
    for (const auto& n : f.nodes()) {
      if (n.op == Op::Freeze && theta.contains(n.index)) {
        for (std::size_t u = 0; u < t.size(); ++u) m.set(n.index, u, false);
      }
    }
    const MonitoringTable before = m;
    resolve_constraints(m, f, theta, at, t);
    evaluate_block(m, f, theta, at);
    for (int j = 1; j <= static_cast<int>(f.size()); ++j) {
      for (std::size_t u = 0; u < at; ++u) EXPECT_EQ(m.cell(j, u), before.cell(j, u));
    }
  }
}
