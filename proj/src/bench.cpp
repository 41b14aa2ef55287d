#include "tptl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tptl/indexed_formula.hpp"
#include "tptl/monitor.hpp"
#include "tptl/trace.hpp"

namespace tptl {

std::string to_string(PatternGroup g) { return g == PatternGroup::EA ? "EA" : "UR"; }

std::optional<PatternGroup> parse_group(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ea") return PatternGroup::EA;
  if (lower == "ur") return PatternGroup::UR;
  return std::nullopt;
}

void validate(const PatternSpec& spec) {
  if (spec.ops != 2 && spec.ops != 4 && spec.ops != 8) {
    throw std::invalid_argument("ops must be 2, 4 or 8 (got " + std::to_string(spec.ops) + ")");
  }
  if (spec.vars < 1 || spec.vars > spec.ops || (spec.vars & (spec.vars - 1)) != 0) {
    throw std::invalid_argument("vars must be a power of two no larger than ops (got " +
                                std::to_string(spec.vars) + ")");
  }
  if (!(spec.mean_step > 0.0)) throw std::invalid_argument("mean_step must be positive");
  if (spec.bound && !(*spec.bound >= 0.0 && std::isfinite(*spec.bound))) {
    throw std::invalid_argument("bound must be a finite nonnegative number");
  }
}

std::vector<PatternSpec> published_configurations() {
  std::vector<PatternSpec> out;
  for (PatternGroup g : {PatternGroup::EA, PatternGroup::UR}) {
    for (int ops : {2, 4, 8}) {
      for (int vars = 1; vars <= ops; vars *= 2) {
        PatternSpec s;
        s.group = g;
        s.ops = ops;
        s.vars = vars;
        out.push_back(s);
      }
    }
  }
  return out;
}

namespace {

const char* const kVariables[] = {"x", "y", "z", "w", "v", "u", "s", "q"};

class PatternBuilder {
 public:
  explicit PatternBuilder(const PatternSpec& spec)
      : spec_(spec), segment_(spec.ops / spec.vars), bound_(spec.constraint_bound()) {}

  Formula level(int k) const {
    const int segment = k / segment_;
    const std::string var = kVariables[segment];
    std::optional<Formula> inner;
    if (k + 1 < spec_.ops) inner = level(k + 1);
    std::optional<Formula> c;
    if (k % segment_ == segment_ - 1) c = Formula::constraint(var, Relation::Le, bound_);

    Formula f = spec_.group == PatternGroup::EA ? ea_level(k, c, inner) : ur_level(k, c, inner);
    if (k % segment_ == 0) f = Formula::freeze(var, f);
    return f;
  }

 private:
  // first /\ c /\ inner, skipping absent parts.
  static Formula chain(Formula first, const std::optional<Formula>& c,
                       const std::optional<Formula>& inner) {
    if (c) first = Formula::conjunction(first, *c);
    if (inner) first = Formula::conjunction(first, *inner);
    return first;
  }

  static Formula ea_level(int k, const std::optional<Formula>& c,
                          const std::optional<Formula>& inner) {
    if (k % 2 == 0) return Formula::eventually(chain(Formula::prop("a2"), c, inner));
    return Formula::always(
        Formula::disjunction(Formula::prop("a3"), chain(Formula::prop("a4"), c, inner)));
  }

  static Formula ur_level(int k, const std::optional<Formula>& c,
                          const std::optional<Formula>& inner) {
    if (k % 2 == 0) {
      Formula rhs = c ? chain(Formula::prop("a4"), c, inner) : *inner;
      return Formula::until(Formula::prop("a2"), rhs);
    }
    return Formula::release(Formula::prop("a3"), chain(Formula::prop("a4"), c, inner));
  }

  const PatternSpec& spec_;
  int segment_;
  double bound_;
};

double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

Formula gen_pattern(const PatternSpec& spec) {
  validate(spec);
  return Formula::always(Formula::implication(Formula::prop("a1"), PatternBuilder(spec).level(0)));
}

const TimingRow* TimingReport::find(PatternGroup g, int ops, int vars, std::size_t length) const {
  for (const auto& r : rows) {
    if (r.spec.group == g && r.spec.ops == ops && r.spec.vars == vars && r.trace_length == length) {
      return &r;
    }
  }
  return nullptr;
}

void TimingReport::write_csv(std::ostream& out) const {
  out << "group,ops,vars,trace_len,runs,mean_s,var_s\n";
  for (const auto& r : rows) {
    out << to_string(r.spec.group) << ',' << r.spec.ops << ',' << r.spec.vars << ','
        << r.trace_length << ',' << r.runs << ',' << format_number(r.mean_s) << ','
        << format_number(r.var_s) << '\n';
  }
}

void TimingReport::write_summary(std::ostream& out) const {
  std::size_t shortest = 0;
  for (const auto& r : rows) {
    if (shortest == 0 || r.trace_length < shortest) shortest = r.trace_length;
  }
  out << std::fixed << std::setprecision(2);
  out << "length ratios (mean time vs length " << shortest << "):\n";
  for (const auto& r : rows) {
    if (r.trace_length == shortest) continue;
    const TimingRow* base = find(r.spec.group, r.spec.ops, r.spec.vars, shortest);
    if (!base || base->mean_s <= 0.0) continue;
    out << "  " << to_string(r.spec.group) << " ops=" << r.spec.ops << " vars=" << r.spec.vars
        << ": T(" << r.trace_length << ")/T(" << shortest << ") = " << r.mean_s / base->mean_s
        << '\n';
  }
  out << "variable-doubling ratios (mean time):\n";
  for (const auto& r : rows) {
    const TimingRow* half = find(r.spec.group, r.spec.ops, r.spec.vars / 2, r.trace_length);
    if (r.spec.vars < 2 || !half || half->mean_s <= 0.0) continue;
    out << "  " << to_string(r.spec.group) << " ops=" << r.spec.ops << " len=" << r.trace_length
        << ": T(vars=" << r.spec.vars << ")/T(vars=" << half->spec.vars
        << ") = " << r.mean_s / half->mean_s << '\n';
  }
  out << std::defaultfloat;
}

TimingReport run_benchmark(const std::vector<PatternSpec>& specs,
                           const std::vector<std::size_t>& lengths, const BenchOptions& options) {
  if (options.runs < 3) throw std::invalid_argument("runs must be at least 3");
  const std::vector<std::string> props{"a1", "a2", "a3", "a4"};
  TimingReport report;
  for (PatternSpec spec : specs) {
    spec.mean_step = options.mean_step;
    const IndexedFormula f = compile(gen_pattern(spec));
    for (std::size_t length : lengths) {
      TimingRow row;
      row.spec = spec;
      row.trace_length = length;
      row.runs = options.runs;
      std::optional<TimedStateSequence> shared;
      for (int r = 0; r < options.runs; ++r) {
        const std::uint64_t seed = options.seed * 1000003u + length * 7919u +
                                   (options.reuse_trace ? 0u : static_cast<std::uint64_t>(r));
        if (!shared || !options.reuse_trace) shared = gen_random(length, props, options.mean_step, seed);
        const auto start = std::chrono::steady_clock::now();
        monitor(f, *shared);
        row.samples.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
      row.mean_s = mean(row.samples);
      double ss = 0.0;
      for (double s : row.samples) ss += (s - row.mean_s) * (s - row.mean_s);
      row.var_s = ss / static_cast<double>(row.samples.size() - 1);
      row.median_s = median(row.samples);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace tptl
