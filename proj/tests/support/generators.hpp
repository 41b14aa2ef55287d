#pragma once

// Seeded random formulas and traces for property tests.

#include <random>
#include <string>
#include <vector>

#include "tptl/formula.hpp"
#include "tptl/mtl.hpp"
#include "tptl/trace.hpp"

namespace tptl::testing {

struct FormulaLimits {
  int max_vars = 3;
  int max_temporal_depth = 5;
  int max_nodes = 16;
  std::vector<std::string> props{"a", "b", "c"};
};

/// Closed, encapsulated formulas with distinct binders named x, y, z, ...
class FormulaGenerator {
 public:
  explicit FormulaGenerator(std::uint64_t seed, FormulaLimits limits = {})
      : rng_(seed), limits_(std::move(limits)) {}

  Formula next() {
    vars_used_ = 0;
    budget_ = limits_.max_nodes;
    return gen("", 0);
  }

  /// Closed but not necessarily encapsulated: constraints may name any
  /// variable in scope.
  Formula next_closed() {
    vars_used_ = 0;
    budget_ = limits_.max_nodes;
    scope_.clear();
    open_scope_ = true;
    Formula f = gen("", 0);
    open_scope_ = false;
    return f;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Formula leaf(const std::string& var) {
    const bool can_constrain = !var.empty() || (open_scope_ && !scope_.empty());
    const int choice = pick(can_constrain ? 6 : 4);
    if (choice == 0) return Formula::top();
    if (choice < 4) return Formula::prop(limits_.props[static_cast<std::size_t>(pick(static_cast<int>(limits_.props.size())))]);
    static const double bounds[] = {0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
    static const Relation rels[] = {Relation::Le, Relation::Lt, Relation::Eq, Relation::Gt,
                                    Relation::Ge};
    std::string v = var;
    if (open_scope_) v = scope_[static_cast<std::size_t>(pick(static_cast<int>(scope_.size())))];
    return Formula::constraint(v, rels[pick(5)], bounds[pick(6)]);
  }

  Formula gen(const std::string& var, int depth) {
    --budget_;
    if (budget_ <= 0 || pick(4) == 0) return leaf(var);
    const bool temporal_ok = depth < limits_.max_temporal_depth;
    switch (pick(13)) {
      case 0: return Formula::negation(gen(var, depth));
      case 1: return Formula::conjunction(gen(var, depth), gen(var, depth));
      case 2: return Formula::disjunction(gen(var, depth), gen(var, depth));
      case 3: return Formula::implication(gen(var, depth), gen(var, depth));
      case 4:
      case 5:
        if (vars_used_ < limits_.max_vars) {
          static const char* names[] = {"x", "y", "z", "w", "v"};
          std::string fresh = names[vars_used_++];
          scope_.push_back(fresh);
          Formula body = gen(fresh, depth);
          scope_.pop_back();
          return Formula::freeze(fresh, body);
        }
        return leaf(var);
      default: break;
    }
    if (!temporal_ok) return leaf(var);
    switch (pick(6)) {
      case 0: return Formula::next(gen(var, depth + 1));
      case 1: return Formula::eventually(gen(var, depth + 1));
      case 2: return Formula::always(gen(var, depth + 1));
      case 3: return Formula::until(gen(var, depth + 1), gen(var, depth + 1));
      case 4: return Formula::release(gen(var, depth + 1), gen(var, depth + 1));
      default: return Formula::until(Formula::top(), gen(var, depth + 1));
    }
  }

  std::mt19937_64 rng_;
  FormulaLimits limits_;
  int vars_used_ = 0;
  int budget_ = 0;
  std::vector<std::string> scope_;
  bool open_scope_ = false;
};

/// Bounded MTL over a, b, c with small closed intervals.
class MtlGenerator {
 public:
  explicit MtlGenerator(std::uint64_t seed) : rng_(seed) {}

  MtlFormula next() {
    budget_ = 10;
    return gen(0);
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Interval interval() {
    static const double lowers[] = {0.0, 0.5, 1.0, 2.0};
    static const double widths[] = {0.0, 0.5, 1.0, 2.0, -1.0};
    Interval i;
    if (pick(5) == 0) return i;
    i.lower = lowers[pick(4)];
    const double w = widths[pick(5)];
    if (w >= 0.0) i.upper = i.lower + w;
    return i;
  }

  MtlFormula gen(int depth) {
    --budget_;
    if (budget_ <= 0 || depth >= 3 || pick(4) == 0) {
      if (pick(5) == 0) return MtlFormula::top();
      static const char* props[] = {"a", "b", "c"};
      return MtlFormula::prop(props[pick(3)]);
    }
    switch (pick(10)) {
      case 0: return MtlFormula::negation(gen(depth));
      case 1: return MtlFormula::conjunction(gen(depth), gen(depth));
      case 2: return MtlFormula::disjunction(gen(depth), gen(depth));
      case 3: return MtlFormula::implication(gen(depth), gen(depth));
      case 4: return MtlFormula::next(gen(depth + 1));
      case 5: return MtlFormula::eventually(gen(depth + 1), interval());
      case 6: return MtlFormula::always(gen(depth + 1), interval());
      case 7: return MtlFormula::release(gen(depth + 1), gen(depth + 1), interval());
      default: return MtlFormula::until(gen(depth + 1), gen(depth + 1), interval());
    }
  }

  std::mt19937_64 rng_;
  int budget_ = 0;
};

/// Traces of 1..max_length samples over a, b, c.  Steps are drawn from a
/// small grid that includes 0, so ties and exact bound hits both occur.
inline TimedStateSequence random_trace(std::mt19937_64& rng, std::size_t max_length = 12) {
  static const double steps[] = {0.0, 0.25, 0.5, 0.5, 1.0, 1.5};
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
  std::vector<Sample> samples(n);
  double now = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) now += steps[std::uniform_int_distribution<int>(0, 5)(rng)];
    samples[i].time = now;
    for (const char* p : {"a", "b", "c"}) {
      if (std::bernoulli_distribution(0.5)(rng)) samples[i].state.push_back(p);
    }
  }
  return TimedStateSequence(samples, false, {"a", "b", "c"});
}

}  // namespace tptl::testing
