#pragma once

// Offline dynamic-programming monitor for encapsulated TPTL.
//
// Each frozen subtree is evaluated once per instantiation sample t, with its
// constraints resolved against tau_t, so the frozen subformula reduces to
// LTL over columns [t, n).  Its root value at t is then copied into the
// freeze row of the enclosing block.  Inner subtrees go first; the outermost
// block is plain LTL over all columns.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tptl/indexed_formula.hpp"
#include "tptl/trace.hpp"

namespace tptl {

/// |phi| x |rho| tri-state matrix; rows are 1-based subformula indices,
/// columns 0-based sample indices.  Stored column-major so that one column
/// of a block is contiguous.
class MonitoringTable {
 public:
  MonitoringTable() = default;
  MonitoringTable(std::size_t rows, std::size_t columns);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }

  bool is_set(int row, std::size_t col) const { return cells_[offset(row, col)] >= 0; }
  /// Throws std::logic_error on an unset cell when strict reads are on.
  bool get(int row, std::size_t col) const {
    const std::int8_t v = cells_[offset(row, col)];
    if (strict_ && v < 0) unset_read(row, col);
    return v > 0;
  }
  void set(int row, std::size_t col, bool value) {
    cells_[offset(row, col)] = value ? 1 : 0;
    ++writes_;
  }

  /// nullopt for unset cells.
  std::optional<bool> cell(int row, std::size_t col) const;

  void set_strict_reads(bool on) { strict_ = on; }
  bool strict_reads() const { return strict_; }
  /// Raw column-major cells for bulk writers, which report their writes
  /// through count_writes.
  std::int8_t* data() { return cells_.data(); }
  void count_writes(std::uint64_t n) { writes_ += n; }
  std::uint64_t writes() const { return writes_; }

  /// Cell-by-cell equality, ignoring counters.
  bool same_cells(const MonitoringTable& other) const;

 private:
  std::size_t offset(int row, std::size_t col) const {
    return col * rows_ + static_cast<std::size_t>(row - 1);
  }
  [[noreturn]] void unset_read(int row, std::size_t col) const;

  std::size_t rows_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::int8_t> cells_;  // -1 unset, 0 false, 1 true
  std::uint64_t writes_ = 0;
  bool strict_ = false;
};

struct MonitorOptions {
  bool keep_table = false;
  /// Fail on any read of a cell that was never written.
  bool strict_reads = false;
};

struct MonitorStats {
  double wall_seconds = 0.0;
  std::size_t formula_size = 0;
  std::size_t trace_length = 0;
  std::size_t variable_count = 0;
  std::uint64_t cell_writes = 0;
};

/// What explain() needs to render a run.
struct TableSnapshot {
  MonitoringTable table;
  std::string formula;
  std::vector<std::string> labels;  // labels[j-1] labels row j
  std::vector<double> timestamps;
};

struct Verdict {
  bool satisfied = false;
  std::optional<TableSnapshot> snapshot;
  MonitorStats stats;
};

Verdict monitor(const IndexedFormula& f, const TimedStateSequence& trace,
                const MonitorOptions& options = {});

/// Fill proposition and constant rows for every column.
void initialize_table(MonitoringTable& table, const IndexedFormula& f,
                      const TimedStateSequence& trace);

/// M[j,u] = (tau_u - tau_t) ~ r for each constraint row j of `block`, u >= t.
void resolve_constraints(MonitoringTable& table, const IndexedFormula& f,
                         const FrozenSubtree& block, std::size_t t,
                         const TimedStateSequence& trace);

/// Recompute the operator rows of `block` for columns n-1 down to t.
void evaluate_block(MonitoringTable& table, const IndexedFormula& f, const FrozenSubtree& block,
                    std::size_t t);

/// Value of row j at column u from already-computed cells.  Leaf and
/// freeze rows return their stored value.
bool compute_ltl(const IndexedFormula& f, int j, std::size_t u, const MonitoringTable& table);

/// JSON dump of the final table; throws std::logic_error when the verdict
/// was produced without keep_table.
std::string explain(const Verdict& v);

}  // namespace tptl
