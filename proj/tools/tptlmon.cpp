// tptlmon: offline TPTL monitoring from the command line.
//
// Exit status: 0 satisfied, 1 falsified, 2 any error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tptl/analysis.hpp"
#include "tptl/bench.hpp"
#include "tptl/indexed_formula.hpp"
#include "tptl/monitor.hpp"
#include "tptl/mtl.hpp"
#include "tptl/oracle.hpp"
#include "tptl/parser.hpp"
#include "tptl/trace.hpp"

namespace {

constexpr int kError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Failure("cannot write '" + path + "'");
  return out;
}

struct CheckArgs {
  std::string spec;
  std::string spec_file;
  std::string trace;
  std::string format = "csv";
  std::string map;
  std::string table;
  bool normalize = false;
  bool oracle = false;
};

int run_check(const CheckArgs& a) {
  const std::string text = a.spec_file.empty() ? a.spec : read_file(a.spec_file);
  const tptl::Formula f = tptl::parse(text);
  if (auto closure = tptl::validate_closed(f); !closure.ok()) throw Failure(closure.message());
  if (auto enc = tptl::check_encapsulated(f); !enc.encapsulated()) throw Failure(enc.message());

  std::optional<tptl::PredicateMap> predicates;
  if (!a.map.empty()) {
    auto in = open_input(a.map);
    predicates = tptl::parse_predicate_map(in);
  }
  tptl::LoadOptions load;
  load.normalize = a.normalize;
  load.predicates = predicates ? &*predicates : nullptr;
  auto in = open_input(a.trace);
  const auto trace = tptl::load_trace(
      in, a.format == "json" ? tptl::TraceFormat::Json : tptl::TraceFormat::Csv, load);

  const tptl::IndexedFormula indexed = tptl::compile(f);
  tptl::MonitorOptions options;
  options.keep_table = !a.table.empty();
  const tptl::Verdict v = tptl::monitor(indexed, trace, options);

  std::cout << "formula: " << tptl::to_string(f) << '\n'
            << "size: " << v.stats.formula_size << '\n'
            << "samples: " << v.stats.trace_length << '\n'
            << "variables: " << v.stats.variable_count << '\n'
            << "cell_writes: " << v.stats.cell_writes << '\n'
            << "seconds: " << v.stats.wall_seconds << '\n';
  if (a.oracle) {
    const bool expected = tptl::eval_semantics(f, trace, 0);
    if (expected != v.satisfied) {
      throw Failure(std::string("oracle disagrees: monitor says ") +
                    (v.satisfied ? "SAT" : "UNSAT") + ", semantics says " +
                    (expected ? "SAT" : "UNSAT"));
    }
    std::cout << "oracle: agrees\n";
  }
  if (!a.table.empty()) {
    auto out = open_output(a.table);
    out << tptl::explain(v);
  }
  std::cout << "RESULT: " << (v.satisfied ? "SAT" : "UNSAT") << std::endl;
  return v.satisfied ? 0 : 1;
}

struct BenchArgs {
  std::string group = "ea";
  int ops = 2;
  int vars = 1;
  std::vector<std::size_t> lengths{1000};
  int runs = 5;
  std::uint64_t seed = 1;
  double mean_step = 1.0;
  std::optional<double> bound;
  bool all = false;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  std::vector<tptl::PatternSpec> specs;
  if (a.all) {
    specs = tptl::published_configurations();
  } else {
    auto group = tptl::parse_group(a.group);
    if (!group) throw Failure("--group must be ea or ur");
    tptl::PatternSpec s;
    s.group = *group;
    s.ops = a.ops;
    s.vars = a.vars;
    specs.push_back(s);
  }
  for (auto& s : specs) {
    s.bound = a.bound;
    s.mean_step = a.mean_step;
    tptl::validate(s);
  }
  tptl::BenchOptions options;
  options.runs = a.runs;
  options.seed = a.seed;
  options.mean_step = a.mean_step;
  const auto report = tptl::run_benchmark(specs, a.lengths, options);
  if (a.out.empty()) {
    report.write_csv(std::cout);
  } else {
    auto out = open_output(a.out);
    report.write_csv(out);
  }
  report.write_summary(std::cout);
  return 0;
}

struct GenArgs {
  std::size_t length = 100;
  std::string aps = "4";
  std::uint64_t seed = 1;
  double mean_step = 1.0;
  std::string out;
};

int run_gen_trace(const GenArgs& a) {
  // A bare count n means a1..an.
  std::vector<std::string> props;
  if (!a.aps.empty() && a.aps.find_first_not_of("0123456789") == std::string::npos) {
    const int n = std::stoi(a.aps);
    for (int i = 1; i <= n; ++i) props.push_back("a" + std::to_string(i));
  } else {
    std::stringstream ss(a.aps);
    for (std::string p; std::getline(ss, p, ',');) {
      if (!p.empty()) props.push_back(p);
    }
  }
  const auto trace = tptl::gen_random(a.length, props, a.mean_step, a.seed);
  if (a.out.empty()) {
    tptl::write_csv(trace, std::cout);
  } else {
    auto out = open_output(a.out);
    tptl::write_csv(trace, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offline monitor for encapsulated TPTL"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Monitor a formula over a recorded trace");
  auto* spec_opt = c->add_option("--spec", check.spec, "Formula text");
  auto* spec_file_opt = c->add_option("--spec-file", check.spec_file, "File holding the formula");
  spec_opt->excludes(spec_file_opt);
  c->add_option("--trace", check.trace, "Trace file")->required();
  c->add_option("--format", check.format, "Trace format")
      ->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--map", check.map, "Predicate map for real-valued signals");
  c->add_flag("--normalize", check.normalize, "Shift timestamps so the first is 0");
  c->add_option("--table", check.table, "Write the final monitoring table as JSON");
  c->add_flag("--oracle", check.oracle, "Cross-check against the reference semantics");

  std::string mtl_spec;
  auto* t = app.add_subcommand("translate-mtl", "Print the TPTL image of an MTL formula");
  t->add_option("--spec", mtl_spec, "MTL formula text")->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the monitor on EA/UR response patterns");
  b->add_option("--group", bench.group, "ea or ur");
  b->add_option("--ops", bench.ops, "Temporal operators: 2, 4 or 8");
  b->add_option("--vars", bench.vars, "Freeze variables: power of two, at most ops");
  b->add_option("--len", bench.lengths, "Trace lengths")->delimiter(',');
  b->add_option("--runs", bench.runs, "Runs per configuration");
  b->add_option("--seed", bench.seed, "Random seed");
  b->add_option("--mean-step", bench.mean_step, "Mean time step of generated traces");
  b->add_option("--bound", bench.bound, "Constraint bound (default 10 * mean step * ops)");
  b->add_flag("--all", bench.all, "Every published configuration");
  b->add_option("--out", bench.out, "CSV output path (default stdout)");

  GenArgs gen;
  auto* g = app.add_subcommand("gen-trace", "Write a random trace as CSV");
  g->add_option("--len", gen.length, "Number of samples")->required();
  g->add_option("--aps", gen.aps, "Proposition count or comma-separated names");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--mean-step", gen.mean_step, "Mean time step");
  g->add_option("--out", gen.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (c->parsed()) {
      if (check.spec_file.empty() && spec_opt->count() == 0) {
        throw Failure("check needs --spec or --spec-file");
      }
      return run_check(check);
    }
    if (t->parsed()) {
      std::cout << tptl::to_string(tptl::translate_mtl(tptl::parse_mtl(mtl_spec))) << '\n';
      return 0;
    }
    if (b->parsed()) return run_bench(bench);
    if (g->parsed()) return run_gen_trace(gen);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
