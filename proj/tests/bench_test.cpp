#include <gtest/gtest.h>

#include <sstream>

#include "tptl/analysis.hpp"
#include "tptl/bench.hpp"
#include "tptl/indexed_formula.hpp"
#include "tptl/monitor.hpp"
#include "tptl/parser.hpp"
#include "tptl/trace.hpp"

using namespace tptl;

namespace {

PatternSpec spec(PatternGroup g, int ops, int vars) {
  PatternSpec s;
  s.group = g;
  s.ops = ops;
  s.vars = vars;
  s.bound = 5;
  return s;
}

}  // namespace

TEST(Pattern, PublishedShapes) {
  EXPECT_EQ(gen_pattern(spec(PatternGroup::EA, 2, 1)),
            parse("G (a1 -> x.F (a2 /\\ G (a3 \\/ a4 /\\ x <= 5)))"));
  EXPECT_EQ(gen_pattern(spec(PatternGroup::EA, 2, 2)),
            parse("G (a1 -> x.F (a2 /\\ x <= 5 /\\ y.G (a3 \\/ a4 /\\ y <= 5)))"));
  EXPECT_EQ(gen_pattern(spec(PatternGroup::UR, 2, 1)),
            parse("G (a1 -> x.(a2 U (a3 R (a4 /\\ x <= 5))))"));
  EXPECT_EQ(gen_pattern(spec(PatternGroup::UR, 2, 2)),
            parse("G (a1 -> x.(a2 U (a4 /\\ x <= 5 /\\ y.(a3 R (a4 /\\ y <= 5)))))"));
}

TEST(Pattern, LongerTemplates) {
  EXPECT_EQ(gen_pattern(spec(PatternGroup::EA, 4, 1)),
            parse("G (a1 -> x.F (a2 /\\ G (a3 \\/ a4 /\\ F (a2 /\\ G (a3 \\/ a4 /\\ x <= 5)))))"));
  EXPECT_EQ(gen_pattern(spec(PatternGroup::UR, 4, 2)),
            parse("G (a1 -> x.(a2 U (a3 R (a4 /\\ x <= 5 /\\ y.(a2 U (a3 R (a4 /\\ y <= 5)))))))"));
}

TEST(Pattern, DefaultBound) {
  PatternSpec s = spec(PatternGroup::EA, 4, 1);
  s.bound.reset();
  s.mean_step = 0.5;
  EXPECT_EQ(s.constraint_bound(), 20.0);
}

TEST(Pattern, AllPublishedConfigurations) {
  const auto configs = published_configurations();
  ASSERT_EQ(configs.size(), 18u);
  const auto trace = gen_random(40, {"a1", "a2", "a3", "a4"}, 1.0, 3);
  for (const auto& s : configs) {
    const Formula f = gen_pattern(s);
    EXPECT_TRUE(validate_closed(f).ok());
    EXPECT_TRUE(check_encapsulated(f).encapsulated()) << to_string(f);
    const IndexedFormula indexed = index_subformulas(f);
    EXPECT_EQ(indexed.variable_count(), static_cast<std::size_t>(s.vars));
    int temporal = 0;
    for (const auto& n : indexed.nodes()) temporal += is_temporal(n.op) ? 1 : 0;
    EXPECT_EQ(temporal, s.ops + 1);  // plus the outer G
    EXPECT_NO_THROW(monitor(indexed, trace));
  }
}

TEST(Pattern, InvalidSpecs) {
  EXPECT_THROW(gen_pattern(spec(PatternGroup::EA, 3, 1)), std::invalid_argument);
  EXPECT_THROW(gen_pattern(spec(PatternGroup::EA, 2, 4)), std::invalid_argument);
  EXPECT_THROW(gen_pattern(spec(PatternGroup::UR, 8, 3)), std::invalid_argument);
  EXPECT_THROW(gen_pattern(spec(PatternGroup::UR, 8, 0)), std::invalid_argument);
  EXPECT_EQ(parse_group("Ur"), PatternGroup::UR);
  EXPECT_FALSE(parse_group("xy"));
}

TEST(Report, CsvAndSummary) {
  BenchOptions o;
  o.runs = 3;
  const auto report = run_benchmark({spec(PatternGroup::EA, 2, 1), spec(PatternGroup::EA, 2, 2)},
                                    {50, 100}, o);
  ASSERT_EQ(report.rows.size(), 4u);
  std::ostringstream csv;
  report.write_csv(csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "group,ops,vars,trace_len,runs,mean_s,var_s");
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    ++count;
  }
  EXPECT_EQ(count, 4);
  std::ostringstream summary;
  report.write_summary(summary);
  EXPECT_NE(summary.str().find("T(100)/T(50)"), std::string::npos);
  EXPECT_NE(summary.str().find("T(vars=2)/T(vars=1)"), std::string::npos);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.samples.size(), 3u);
    EXPECT_GE(r.var_s, 0.0);
  }
  EXPECT_THROW(run_benchmark({spec(PatternGroup::EA, 2, 1)}, {10}, BenchOptions{2}), std::invalid_argument);
}
