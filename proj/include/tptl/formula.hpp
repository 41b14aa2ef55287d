#pragma once

// Immutable TPTL formula trees.
//
// A Formula is a cheap value handle onto a shared, immutable node.  Copies
// share structure; equality is structural.  The derived operators (->, F, G,
// R) are first-class node kinds so that indexed formulas keep one row per
// operator the user wrote.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace tptl {

enum class Op : std::uint8_t {
  True,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,
  Until,
  Release,
  Eventually,
  Always,
  Freeze,
  Constraint,
};

/// Comparison used by a time constraint `x ~ r`.
enum class Relation : std::uint8_t { Le, Lt, Eq, Gt, Ge };

std::string_view to_string(Relation rel);
bool compare(double lhs, Relation rel, double rhs);

bool is_unary(Op op);
bool is_binary(Op op);
bool is_temporal(Op op);
/// True for nodes whose table rows are never recomputed by the DP
/// (propositions, constants, constraints).
bool is_leaf(Op op);

class Formula {
 public:
  /// The constant `true`.
  Formula();

  static Formula top();
  static Formula bottom();  // Not(True)
  static Formula prop(std::string name);
  static Formula constraint(std::string variable, Relation rel, double bound);
  static Formula negation(Formula child);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula next(Formula child);
  static Formula until(Formula lhs, Formula rhs);
  static Formula release(Formula lhs, Formula rhs);
  static Formula eventually(Formula child);
  static Formula always(Formula child);
  static Formula freeze(std::string variable, Formula body);

  /// Rebuild a node of the same kind and payload over new children.
  Formula with_children(Formula lhs, Formula rhs) const;

  Op op() const { return node_->op; }
  /// Proposition name, bound variable (Freeze) or constrained variable.
  const std::string& name() const { return node_->name; }
  Relation relation() const { return node_->rel; }
  double bound() const { return node_->bound; }

  /// Only child of a unary node (Freeze body included).
  const Formula& child() const { return *node_->lhs; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  /// Number of nodes in the tree (shared subtrees counted per occurrence).
  std::size_t size() const;
  /// Nesting depth of temporal operators.
  std::size_t temporal_depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  /// Identity of the underlying node (not structural).
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Op op = Op::True;
    std::string name;
    Relation rel = Relation::Le;
    double bound = 0.0;
    std::unique_ptr<const Formula> lhs;
    std::unique_ptr<const Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, Relation rel, double bound,
                      const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

enum class PrintStyle {
  /// Parentheses only where precedence or associativity requires them.
  Minimal,
  /// Every binary operator and every non-atomic operand parenthesized.
  Full,
};

/// Render in the concrete syntax accepted by parse().
std::string to_string(const Formula& f, PrintStyle style = PrintStyle::Minimal);

/// Shortest decimal that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace tptl
