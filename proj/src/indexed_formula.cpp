#include "tptl/indexed_formula.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tptl/analysis.hpp"

namespace tptl {

namespace {

class Numbering {
 public:
  Numbering(std::vector<IndexedNode>& nodes, std::vector<FrozenSubtree>& blocks)
      : nodes_(nodes), blocks_(blocks) {}

  void block(const Formula& root, int parent_row, const std::string& variable) {
    const int block_id = static_cast<int>(blocks_.size());
    blocks_.push_back({});
    FrozenSubtree info;
    info.variable = variable;
    info.parent = parent_row;

    // Freeze nodes met in this block, in numbering order: (row, body).
    std::vector<std::pair<int, Formula>> nested;
    std::deque<int> queue;
    info.root = assign(root, block_id);
    queue.push_back(info.root);
    while (!queue.empty()) {
      const int row = queue.front();
      queue.pop_front();
      const Formula f = nodes_[row - 1].source;
      if (f.op() == Op::Freeze) {
        nested.emplace_back(row, f.child());
        continue;
      }
      if (f.op() == Op::Constraint) info.constraints.push_back(row);
      if (is_unary(f.op()) || is_binary(f.op())) {
        const int lhs = assign(f.lhs(), block_id);
        nodes_[row - 1].lhs = lhs;
        queue.push_back(lhs);
      }
      if (is_binary(f.op())) {
        const int rhs = assign(f.rhs(), block_id);
        nodes_[row - 1].rhs = rhs;
        queue.push_back(rhs);
      }
    }
    info.min = info.root;
    info.max = static_cast<int>(nodes_.size());
    blocks_[block_id] = info;

    for (auto& [row, body] : nested) {
      nodes_[row - 1].lhs = static_cast<int>(nodes_.size()) + 1;
      block(body, row, nodes_[row - 1].name);
    }
  }

 private:
  int assign(const Formula& f, int block_id) {
    IndexedNode n;
    n.index = static_cast<int>(nodes_.size()) + 1;
    n.op = f.op();
    n.name = f.name();
    n.relation = f.relation();
    n.bound = f.bound();
    n.block = block_id;
    n.source = f;
    nodes_.push_back(std::move(n));
    return nodes_.back().index;
  }

  std::vector<IndexedNode>& nodes_;
  std::vector<FrozenSubtree>& blocks_;
};

}  // namespace

IndexedFormula index_subformulas(const Formula& f) {
  if (auto closure = validate_closed(f); !closure.ok()) throw ValidationError(closure.message());
  if (auto enc = check_encapsulated(f); !enc.encapsulated()) throw ValidationError(enc.message());
  const auto binders = bound_variables(f);
  if (std::set<std::string>(binders.begin(), binders.end()).size() != binders.size()) {
    throw ValidationError("freeze variables must be pairwise distinct; alpha-rename first");
  }

  IndexedFormula out;
  out.formula_ = f;
  out.nodes_.reserve(f.size());
  Numbering(out.nodes_, out.blocks_).block(f, 0, "");
  out.subtrees_ = partition_subtrees(out);
  return out;
}

std::vector<FrozenSubtree> partition_subtrees(const IndexedFormula& f) {
  std::vector<FrozenSubtree> out;
  for (const auto& b : f.blocks()) {
    if (!b.is_outer()) out.push_back(b);
  }
  // Nested bodies are numbered after everything enclosing them, so a
  // decreasing root order visits inner blocks first.
  std::sort(out.begin(), out.end(),
            [](const FrozenSubtree& a, const FrozenSubtree& b) { return a.root > b.root; });
  return out;
}

IndexedFormula compile(const Formula& f) {
  if (auto closure = validate_closed(f); !closure.ok()) throw ValidationError(closure.message());
  if (auto enc = check_encapsulated(f); !enc.encapsulated()) throw ValidationError(enc.message());
  const auto binders = bound_variables(f);
  const bool unique = std::set<std::string>(binders.begin(), binders.end()).size() == binders.size();
  return index_subformulas(unique ? f : alpha_rename(f));
}

}  // namespace tptl
