#pragma once

// Flattened formula used by the monitor: one row per subformula occurrence,
// numbered so that parents come before children, and partitioned into
// blocks at freeze quantifiers.
//
// Numbering: the outermost block is numbered first in breadth-first order,
// starting at 1.  A block holds every node from its root down to, but not
// below, nested freeze nodes (the freeze node itself belongs to the
// enclosing block).  Once a block is numbered, the bodies of its nested
// freezes are numbered as blocks of their own, left to right, recursively.
// Each block therefore occupies a contiguous index range.

#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

struct IndexedNode {
  int index = 0;  // 1-based
  Op op = Op::True;
  std::string name;
  Relation relation = Relation::Le;
  double bound = 0.0;
  int lhs = 0;  // 0 when absent; the body for Freeze
  int rhs = 0;
  int block = 0;  // position in IndexedFormula::blocks()
  Formula source;
};

/// A block of rows evaluated together.  For a freeze block `parent` is the
/// row of the freeze node and `root` the row of its body; the outermost
/// block has no parent (0) and root 1.
struct FrozenSubtree {
  std::string variable;  // empty for the outermost block
  int parent = 0;
  int root = 0;
  int min = 0;
  int max = 0;
  /// Rows holding constraints on `variable`, ascending.
  std::vector<int> constraints;

  bool is_outer() const { return parent == 0; }
  bool contains(int row) const { return min <= row && row <= max; }
};

class IndexedFormula {
 public:
  const Formula& formula() const { return formula_; }
  /// |phi|
  std::size_t size() const { return nodes_.size(); }
  const IndexedNode& node(int index) const { return nodes_[static_cast<std::size_t>(index - 1)]; }
  const std::vector<IndexedNode>& nodes() const { return nodes_; }

  /// Blocks in numbering order; blocks()[0] is the outermost.
  const std::vector<FrozenSubtree>& blocks() const { return blocks_; }
  /// Freeze blocks in processing order (innermost before enclosing).
  const std::vector<FrozenSubtree>& subtrees() const { return subtrees_; }
  const FrozenSubtree& outer_block() const { return blocks_.front(); }
  /// |V|
  std::size_t variable_count() const { return subtrees_.size(); }

 private:
  friend IndexedFormula index_subformulas(const Formula& f);
  std::vector<IndexedNode> nodes_;
  std::vector<FrozenSubtree> blocks_;
  std::vector<FrozenSubtree> subtrees_;
  Formula formula_;
};

/// Number the subformulas of `f` and partition them into blocks.
/// Requires `f` closed, encapsulated and with pairwise distinct binder
/// names (see alpha_rename); throws ValidationError otherwise.
IndexedFormula index_subformulas(const Formula& f);

/// Freeze-rooted blocks ordered by decreasing root index, followed by
/// nothing else: the outermost block is reported separately.
std::vector<FrozenSubtree> partition_subtrees(const IndexedFormula& f);

/// Validate, alpha-rename and index in one step.
IndexedFormula compile(const Formula& f);

}  // namespace tptl
