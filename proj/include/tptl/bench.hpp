#pragma once

// Timing harness over the Eventually/Always (EA) and Until/Release (UR)
// response patterns G (a1 -> psi).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

enum class PatternGroup { EA, UR };

std::string to_string(PatternGroup g);
/// "ea" / "ur", case-insensitive; nullopt otherwise.
std::optional<PatternGroup> parse_group(std::string_view text);

struct PatternSpec {
  PatternGroup group = PatternGroup::EA;
  int ops = 2;   // temporal operators in psi: 2, 4 or 8
  int vars = 1;  // freeze variables: a power of two, at most ops
  /// Bound r of every constraint x <= r; defaults to 10 * mean_step * ops.
  std::optional<double> bound;
  double mean_step = 1.0;

  double constraint_bound() const { return bound.value_or(10.0 * mean_step * ops); }
};

/// Throws std::invalid_argument naming the offending field.
void validate(const PatternSpec& spec);

/// The configurations of the published runtime table, phi_1 .. phi_9 per group.
std::vector<PatternSpec> published_configurations();

/// G (a1 -> psi) with psi the ops-operator chain split into `vars`
/// contiguous segments, each opened by a freeze and closed by a constraint
/// on its variable.
Formula gen_pattern(const PatternSpec& spec);

struct TimingRow {
  PatternSpec spec;
  std::size_t trace_length = 0;
  int runs = 0;
  double mean_s = 0.0;
  double var_s = 0.0;     // sample variance
  double median_s = 0.0;
  std::vector<double> samples;
};

struct TimingReport {
  std::vector<TimingRow> rows;

  const TimingRow* find(PatternGroup g, int ops, int vars, std::size_t length) const;
  /// CSV with header group,ops,vars,trace_len,runs,mean_s,var_s.
  void write_csv(std::ostream& out) const;
  /// Length ratios against the shortest length, and variable-doubling
  /// ratios at each length, computed on means.
  void write_summary(std::ostream& out) const;
};

struct BenchOptions {
  int runs = 5;
  std::uint64_t seed = 1;
  double mean_step = 1.0;
  /// Monitor the same trace repeatedly instead of a fresh one per run.
  bool reuse_trace = false;
};

/// For each (spec, length): `runs` random traces, each monitored once and
/// timed.  Requires runs >= 3.
TimingReport run_benchmark(const std::vector<PatternSpec>& specs,
                           const std::vector<std::size_t>& lengths, const BenchOptions& options);

}  // namespace tptl
