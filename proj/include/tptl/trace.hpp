#pragma once

// Finite timed state sequences: ingestion (CSV / JSON), mapping numeric
// signals onto atomic propositions, and seeded random generation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sample {
  double time = 0.0;
  std::vector<std::string> state;  // propositions that hold
};

/// A validated finite timed state sequence: at least one sample, first
/// timestamp 0, timestamps weakly increasing.
class TimedStateSequence {
 public:
  /// Validates; throws TraceError.  With `normalize` the first timestamp
  /// is subtracted from all of them instead of being required to be 0.
  /// `alphabet` adds propositions that may never hold.
  explicit TimedStateSequence(const std::vector<Sample>& samples, bool normalize = false,
                              const std::vector<std::string>& alphabet = {});

  std::size_t size() const { return times_.size(); }
  double time(std::size_t i) const { return times_[i]; }
  std::span<const double> times() const { return times_; }

  /// Alphabet: every proposition declared or holding somewhere, sorted.
  const std::vector<std::string>& propositions() const { return propositions_; }
  /// Truth values of `name` per sample, or nullopt if it never appears.
  std::optional<std::span<const std::uint8_t>> column(const std::string& name) const;
  bool holds(const std::string& name, std::size_t i) const;
  std::vector<std::string> state(std::size_t i) const;

  friend bool operator==(const TimedStateSequence&, const TimedStateSequence&) = default;

 private:
  std::vector<double> times_;
  std::vector<std::string> propositions_;
  std::vector<std::vector<std::uint8_t>> columns_;  // parallel to propositions_
};

struct Predicate {
  std::string proposition;
  std::string column;
  Relation relation = Relation::Ge;
  double threshold = 0.0;
};

/// Threshold predicates turning signal columns into propositions.
class PredicateMap {
 public:
  PredicateMap() = default;
  /// Throws TraceError on duplicate proposition names.
  explicit PredicateMap(std::vector<Predicate> predicates);

  const std::vector<Predicate>& predicates() const { return predicates_; }
  bool empty() const { return predicates_.empty(); }

 private:
  std::vector<Predicate> predicates_;
};

/// Lines of the form `name := column <op> number`; blank lines and
/// `#` comments are ignored.
PredicateMap parse_predicate_map(std::istream& in);

/// Real-valued signals sampled at timestamps, row-major.
struct NumericTrace {
  std::vector<std::string> columns;
  std::vector<double> times;
  std::vector<std::vector<double>> rows;  // rows[i][c] is columns[c] at times[i]
};

/// Pointwise mapping without validation of the timestamps.
std::vector<Sample> map_samples(const NumericTrace& trace, const PredicateMap& map);

TimedStateSequence apply_predicate_map(const NumericTrace& trace, const PredicateMap& map,
                                       bool normalize = false);

enum class TraceFormat { Csv, Json };

struct LoadOptions {
  bool normalize = false;
  /// When set, cells are real-valued signals mapped through it.
  const PredicateMap* predicates = nullptr;
};

/// CSV: header `time,<col>,...`, boolean cells 0/1/true/false (or numbers
/// when a predicate map is given).  JSON: array of
/// {"time": t, "state": [names]} or {"time": t, "signals": {name: value}}.
TimedStateSequence load_trace(std::istream& in, TraceFormat format, const LoadOptions& opts = {});
NumericTrace load_numeric_csv(std::istream& in);

/// Header lists propositions(); cells are 0/1; times in shortest
/// round-trip form.
void write_csv(const TimedStateSequence& trace, std::ostream& out);

/// Steps uniform in (0, 2*mean_step], each proposition true with
/// probability 1/2; deterministic for a given seed.
TimedStateSequence gen_random(std::size_t length, const std::vector<std::string>& propositions,
                              double mean_step, std::uint64_t seed);

}  // namespace tptl
