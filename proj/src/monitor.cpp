#include "tptl/monitor.hpp"

#include <chrono>
#include <stdexcept>

#include "json.hpp"

namespace tptl {

MonitoringTable::MonitoringTable(std::size_t rows, std::size_t columns)
    : rows_(rows), columns_(columns), cells_(rows * columns, -1) {}

std::optional<bool> MonitoringTable::cell(int row, std::size_t col) const {
  const std::int8_t v = cells_[offset(row, col)];
  if (v < 0) return std::nullopt;
  return v > 0;
}

bool MonitoringTable::same_cells(const MonitoringTable& other) const {
  return rows_ == other.rows_ && columns_ == other.columns_ && cells_ == other.cells_;
}

void MonitoringTable::unset_read(int row, std::size_t col) const {
  throw std::logic_error("read of unset cell M[" + std::to_string(row) + "," +
                         std::to_string(col) + "]");
}

void initialize_table(MonitoringTable& table, const IndexedFormula& f,
                      const TimedStateSequence& trace) {
  const std::size_t n = trace.size();
  for (const auto& node : f.nodes()) {
    if (node.op == Op::True) {
      for (std::size_t u = 0; u < n; ++u) table.set(node.index, u, true);
    } else if (node.op == Op::Prop) {
      auto col = trace.column(node.name);
      for (std::size_t u = 0; u < n; ++u) table.set(node.index, u, col && (*col)[u] != 0);
    }
  }
}

void resolve_constraints(MonitoringTable& table, const IndexedFormula& f,
                         const FrozenSubtree& block, std::size_t t,
                         const TimedStateSequence& trace) {
  const double origin = trace.time(t);
  for (int j : block.constraints) {
    const IndexedNode& c = f.node(j);
    for (std::size_t u = t; u < trace.size(); ++u) {
      table.set(j, u, compare(trace.time(u) - origin, c.relation, c.bound));
    }
  }
}

namespace {

// The recurrences, over any cell reader get(row, col).  Bitwise operators
// keep the hot loop free of data-dependent branches.
template <typename Get>
bool ltl_rule(Op op, int j, int m, int n, std::size_t u, bool last, Get&& get) {
  switch (op) {
    case Op::True:
    case Op::Prop:
    case Op::Constraint:
    case Op::Freeze:
      return get(j, u);
    case Op::Not: return !get(m, u);
    case Op::And: return get(m, u) & get(n, u);
    case Op::Or: return get(m, u) | get(n, u);
    case Op::Implies: return !get(m, u) | get(n, u);
    case Op::Next: return !last && get(m, u + 1);
    case Op::Until:
      if (last) return get(n, u);
      return get(n, u) | (get(m, u) & get(j, u + 1));
    case Op::Eventually:
      if (last) return get(m, u);
      return get(m, u) | get(j, u + 1);
    case Op::Always:
      if (last) return get(m, u);
      return get(m, u) & get(j, u + 1);
    case Op::Release:
      if (last) return get(n, u);
      return get(n, u) & (get(m, u) | get(j, u + 1));
  }
  return false;
}

struct Step {
  Op op;
  int j, m, n;
};

}  // namespace

bool compute_ltl(const IndexedFormula& f, int j, std::size_t u, const MonitoringTable& M) {
  const IndexedNode& node = f.node(j);
  return ltl_rule(node.op, j, node.lhs, node.rhs, u, u + 1 == M.columns(),
                  [&](int row, std::size_t col) { return M.get(row, col); });
}

void evaluate_block(MonitoringTable& table, const IndexedFormula& f, const FrozenSubtree& block,
                    std::size_t t) {
  // Rows that are recomputed, in descending index order.
  std::vector<Step> steps;
  for (int j = block.max; j >= block.min; --j) {
    const IndexedNode& node = f.node(j);
    if (!is_leaf(node.op) && node.op != Op::Freeze) steps.push_back({node.op, j, node.lhs, node.rhs});
  }
  const std::size_t last = table.columns() - 1;
  if (table.strict_reads()) {
    auto get = [&](int row, std::size_t col) { return table.get(row, col); };
    for (std::size_t u = table.columns(); u-- > t;) {
      for (const Step& s : steps) table.set(s.j, u, ltl_rule(s.op, s.j, s.m, s.n, u, u == last, get));
    }
    return;
  }
  std::int8_t* cells = table.data();
  const std::size_t rows = table.rows();
  auto get = [&](int row, std::size_t col) { return cells[col * rows + static_cast<std::size_t>(row - 1)] != 0; };
  for (std::size_t u = table.columns(); u-- > t;) {
    std::int8_t* column = cells + u * rows - 1;
    for (const Step& s : steps) column[s.j] = ltl_rule(s.op, s.j, s.m, s.n, u, u == last, get);
  }
  table.count_writes(steps.size() * (table.columns() - t));
}

Verdict monitor(const IndexedFormula& f, const TimedStateSequence& trace,
                const MonitorOptions& options) {
  if (f.size() == 0) throw std::invalid_argument("formula is not indexed");
  if (trace.size() == 0) throw std::invalid_argument("trace is empty");
  const auto start = std::chrono::steady_clock::now();

  MonitoringTable M(f.size(), trace.size());
  M.set_strict_reads(options.strict_reads);
  initialize_table(M, f, trace);
  for (const FrozenSubtree& theta : f.subtrees()) {
    for (std::size_t t = 0; t < trace.size(); ++t) {
      resolve_constraints(M, f, theta, t, trace);
      evaluate_block(M, f, theta, t);
      M.set(theta.parent, t, M.get(theta.root, t));
    }
  }
  evaluate_block(M, f, f.outer_block(), 0);

  Verdict v;
  v.satisfied = M.get(1, 0);
  v.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.stats.formula_size = f.size();
  v.stats.trace_length = trace.size();
  v.stats.variable_count = f.variable_count();
  v.stats.cell_writes = M.writes();
  if (options.keep_table) {
    TableSnapshot s;
    s.formula = to_string(f.formula());
    for (const auto& node : f.nodes()) s.labels.push_back(to_string(node.source));
    s.timestamps.assign(trace.times().begin(), trace.times().end());
    s.table = std::move(M);
    v.snapshot = std::move(s);
  }
  return v;
}

std::string explain(const Verdict& v) {
  if (!v.snapshot) throw std::logic_error("verdict was produced without keep_table");
  const TableSnapshot& s = *v.snapshot;
  nlohmann::ordered_json doc;
  doc["formula"] = s.formula;
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < s.table.rows(); ++r) {
    const int j = static_cast<int>(r) + 1;
    nlohmann::ordered_json row;
    row["index"] = j;
    row["label"] = s.labels[r];
    row["cells"] = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < s.table.columns(); ++u) {
      auto c = s.table.cell(j, u);
      row["cells"].push_back(c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json());
    }
    doc["rows"].push_back(std::move(row));
  }
  doc["timestamps"] = s.timestamps;
  doc["verdict"] = v.satisfied;
  return doc.dump(2) + "\n";
}

}  // namespace tptl
