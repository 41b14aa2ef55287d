#include "tptl/formula.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace tptl {

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

bool compare(double lhs, Relation rel, double rhs) {
  switch (rel) {
    case Relation::Le: return lhs <= rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Eq: return lhs == rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Ge: return lhs >= rhs;
  }
  return false;
}

bool is_unary(Op op) {
  switch (op) {
    case Op::Not:
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
    case Op::Freeze:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Until:
    case Op::Release:
      return true;
    default:
      return false;
  }
}

bool is_temporal(Op op) {
  switch (op) {
    case Op::Next:
    case Op::Until:
    case Op::Release:
    case Op::Eventually:
    case Op::Always:
      return true;
    default:
      return false;
  }
}

bool is_leaf(Op op) {
  return op == Op::True || op == Op::Prop || op == Op::Constraint;
}

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Op op, std::string name, Relation rel, double bound,
                      const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  node->rel = rel;
  node->bound = bound;
  if (lhs != nullptr) node->lhs = std::make_unique<const Formula>(*lhs);
  if (rhs != nullptr) node->rhs = std::make_unique<const Formula>(*rhs);
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula constant = [] {
    auto node = std::make_shared<Node>();
    node->op = Op::True;
    return Formula(std::move(node));
  }();
  return constant;
}

Formula Formula::bottom() { return negation(top()); }

Formula Formula::prop(std::string name) {
  return make(Op::Prop, std::move(name), Relation::Le, 0.0, nullptr, nullptr);
}

Formula Formula::constraint(std::string variable, Relation rel, double bound) {
  if (!(bound >= 0.0) || bound == std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("constraint bound must be a finite non-negative number");
  }
  return make(Op::Constraint, std::move(variable), rel, bound, nullptr, nullptr);
}

Formula Formula::negation(Formula child) {
  return make(Op::Not, {}, Relation::Le, 0.0, &child, nullptr);
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Op::And, {}, Relation::Le, 0.0, &lhs, &rhs);
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Op::Or, {}, Relation::Le, 0.0, &lhs, &rhs);
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Op::Implies, {}, Relation::Le, 0.0, &lhs, &rhs);
}
Formula Formula::next(Formula child) {
  return make(Op::Next, {}, Relation::Le, 0.0, &child, nullptr);
}
Formula Formula::until(Formula lhs, Formula rhs) {
  return make(Op::Until, {}, Relation::Le, 0.0, &lhs, &rhs);
}
Formula Formula::release(Formula lhs, Formula rhs) {
  return make(Op::Release, {}, Relation::Le, 0.0, &lhs, &rhs);
}
Formula Formula::eventually(Formula child) {
  return make(Op::Eventually, {}, Relation::Le, 0.0, &child, nullptr);
}
Formula Formula::always(Formula child) {
  return make(Op::Always, {}, Relation::Le, 0.0, &child, nullptr);
}
Formula Formula::freeze(std::string variable, Formula body) {
  return make(Op::Freeze, std::move(variable), Relation::Le, 0.0, &body, nullptr);
}

Formula Formula::with_children(Formula lhs, Formula rhs) const {
  const Node& n = *node_;
  if (is_binary(n.op)) return make(n.op, n.name, n.rel, n.bound, &lhs, &rhs);
  if (is_unary(n.op)) return make(n.op, n.name, n.rel, n.bound, &lhs, nullptr);
  return *this;
}

std::size_t Formula::size() const {
  std::size_t total = 1;
  if (node_->lhs) total += node_->lhs->size();
  if (node_->rhs) total += node_->rhs->size();
  return total;
}

std::size_t Formula::temporal_depth() const {
  std::size_t below = 0;
  if (node_->lhs) below = node_->lhs->temporal_depth();
  if (node_->rhs) below = std::max(below, node_->rhs->temporal_depth());
  return below + (is_temporal(node_->op) ? 1 : 0);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name) return false;
  if (x.op == Op::Constraint && (x.rel != y.rel || x.bound != y.bound)) return false;
  if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
  if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
  if (x.lhs && !(*x.lhs == *y.lhs)) return false;
  if (x.rhs && !(*x.rhs == *y.rhs)) return false;
  return true;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  assert(ec == std::errc{});
  return std::string(buf, end);
}

namespace {

// Binding strength, loosest first.  Mirrors the grammar levels.
enum Level : int { kImplies = 1, kOr = 2, kAnd = 3, kUntil = 4, kUnary = 5, kAtom = 6 };

int level(const Formula& f) {
  switch (f.op()) {
    case Op::Implies: return kImplies;
    case Op::Or: return kOr;
    case Op::And: return kAnd;
    case Op::Until:
    case Op::Release: return kUntil;
    case Op::Not:
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
    case Op::Freeze: return kUnary;
    default:
      return kAtom;
  }
}

bool is_false_constant(const Formula& f) {
  return f.op() == Op::Not && f.child().op() == Op::True;
}

class Printer {
 public:
  explicit Printer(PrintStyle style) : style_(style) {}

  void print(const Formula& f, std::string& out) const {
    if (is_false_constant(f)) {
      out += "false";
      return;
    }
    switch (f.op()) {
      case Op::True: out += "true"; return;
      case Op::Prop: out += f.name(); return;
      case Op::Constraint:
        out += f.name();
        out += ' ';
        out += to_string(f.relation());
        out += ' ';
        out += format_number(f.bound());
        return;
      case Op::Not: out += '!'; operand(f.child(), out); return;
      case Op::Next: out += "X "; operand(f.child(), out); return;
      case Op::Eventually: out += "F "; operand(f.child(), out); return;
      case Op::Always: out += "G "; operand(f.child(), out); return;
      case Op::Freeze:
        out += f.name();
        out += '.';
        // Bodies read better bracketed; only constants and propositions go without.
        if (f.child().op() == Op::True || f.child().op() == Op::Prop) {
          print(f.child(), out);
        } else {
          wrap(f.child(), out);
        }
        return;
      case Op::Implies: binary(f, " -> ", kImplies + 1, kImplies, out); return;
      case Op::Or: binary(f, " \\/ ", kOr, kOr + 1, out); return;
      case Op::And: binary(f, " /\\ ", kAnd, kAnd + 1, out); return;
      case Op::Until: binary(f, " U ", kUnary, kUntil, out); return;
      case Op::Release: binary(f, " R ", kUnary, kUntil, out); return;
    }
  }

 private:
  void wrap(const Formula& f, std::string& out) const {
    out += '(';
    print(f, out);
    out += ')';
  }

  void at_least(const Formula& f, int min_level, std::string& out) const {
    if (level(f) < min_level) {
      wrap(f, out);
    } else {
      print(f, out);
    }
  }

  void operand(const Formula& f, std::string& out) const {
    if (style_ == PrintStyle::Full && level(f) != kAtom) {
      // Binary nodes bracket themselves in this style.
      if (is_binary(f.op())) {
        print(f, out);
      } else {
        wrap(f, out);
      }
    } else {
      at_least(f, kUnary, out);
    }
  }

  void binary(const Formula& f, const char* symbol, int left_min, int right_min,
              std::string& out) const {
    if (style_ == PrintStyle::Full) {
      out += '(';
      operand(f.lhs(), out);
      out += symbol;
      operand(f.rhs(), out);
      out += ')';
      return;
    }
    at_least(f.lhs(), left_min, out);
    out += symbol;
    at_least(f.rhs(), right_min, out);
  }

  PrintStyle style_;
};

}  // namespace

std::string to_string(const Formula& f, PrintStyle style) {
  std::string out;
  Printer(style).print(f, out);
  return out;
}

}  // namespace tptl
