#include "tptl/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tptl {

namespace {

std::string step_label(const Formula& f) {
  switch (f.op()) {
    case Op::Not: return "!";
    case Op::And: return "/\\";
    case Op::Or: return "\\/";
    case Op::Implies: return "->";
    case Op::Next: return "X";
    case Op::Until: return "U";
    case Op::Release: return "R";
    case Op::Eventually: return "F";
    case Op::Always: return "G";
    case Op::Freeze: return f.name() + ".";
    default: return to_string(f);
  }
}

// Walks a formula keeping the chain of enclosing binders and the path.
template <typename Visit>
void walk(const Formula& f, std::vector<std::string>& binders, NodePath& path, Visit&& visit) {
  if (!visit(f, binders, path)) return;
  if (f.op() == Op::Freeze) {
    binders.push_back(f.name());
    path.steps.push_back(step_label(f));
    walk(f.child(), binders, path, visit);
    path.steps.pop_back();
    binders.pop_back();
  } else if (is_unary(f.op())) {
    path.steps.push_back(step_label(f));
    walk(f.child(), binders, path, visit);
    path.steps.pop_back();
  } else if (is_binary(f.op())) {
    path.steps.push_back(step_label(f) + ".lhs");
    walk(f.lhs(), binders, path, visit);
    path.steps.back() = step_label(f) + ".rhs";
    walk(f.rhs(), binders, path, visit);
    path.steps.pop_back();
  }
}

}  // namespace

std::string NodePath::str() const {
  if (steps.empty()) return "<root>";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) out += " > ";
    out += steps[i];
  }
  return out;
}

ClosureReport validate_closed(const Formula& f) {
  ClosureReport report;
  std::vector<std::string> binders;
  NodePath path;
  walk(f, binders, path, [&](const Formula& node, const std::vector<std::string>& scope,
                             const NodePath& at) {
    if (node.op() == Op::Constraint &&
        std::find(scope.begin(), scope.end(), node.name()) == scope.end()) {
      report.unbound.push_back({node.name(), to_string(node), at});
    }
    return true;
  });
  return report;
}

std::string ClosureReport::message() const {
  if (ok()) return "formula is closed";
  std::string out;
  for (const auto& u : unbound) {
    if (!out.empty()) out += "\n";
    out += "unbound variable " + u.variable + " in '" + u.subformula + "' at " + u.path.str();
  }
  return out;
}

EncapsulationReport check_encapsulated(const Formula& f) {
  EncapsulationReport report;
  std::vector<std::string> binders;
  NodePath path;
  walk(f, binders, path, [&](const Formula& node, const std::vector<std::string>& scope,
                             const NodePath& at) {
    if (report.witness) return false;
    using Kind = EncapsulationWitness::Kind;
    std::string innermost = scope.empty() ? std::string() : scope.back();
    if (node.op() == Op::Freeze &&
        std::find(scope.begin(), scope.end(), node.name()) != scope.end()) {
      report.witness = EncapsulationWitness{Kind::Shadowing, node.name(), innermost,
                                            to_string(node), at};
      return false;
    }
    if (node.op() == Op::Constraint && node.name() != innermost) {
      Kind kind = scope.empty() || std::find(scope.begin(), scope.end(), node.name()) == scope.end()
                      ? Kind::Unbound
                      : Kind::ForeignVariable;
      report.witness = EncapsulationWitness{kind, node.name(), innermost, to_string(node), at};
      return false;
    }
    return true;
  });
  return report;
}

std::string EncapsulationReport::message() const {
  if (!witness) return "formula is encapsulated";
  const auto& w = *witness;
  std::string where = " at " + w.path.str();
  switch (w.kind) {
    case EncapsulationWitness::Kind::ForeignVariable:
      return "not encapsulated: '" + w.subformula + "' uses " + w.variable +
             " inside the scope of " + w.binder + "." + where;
    case EncapsulationWitness::Kind::Shadowing:
      return "not encapsulated: " + w.variable + ". re-binds a variable already in scope" + where;
    case EncapsulationWitness::Kind::Unbound:
      return "not closed: '" + w.subformula + "' uses unbound variable " + w.variable + where;
  }
  return "not encapsulated";
}

namespace {

class Renamer {
 public:
  Formula rename(const Formula& f) {
    switch (f.op()) {
      case Op::Constraint: {
        auto it = scope_.find(f.name());
        if (it == scope_.end() || it->second.empty()) return f;
        return Formula::constraint(it->second.back(), f.relation(), f.bound());
      }
      case Op::Freeze: {
        std::string fresh = fresh_name(f.name());
        scope_[f.name()].push_back(fresh);
        Formula body = rename(f.child());
        scope_[f.name()].pop_back();
        return Formula::freeze(fresh, body);
      }
      default:
        if (is_unary(f.op())) return f.with_children(rename(f.child()), Formula());
        if (is_binary(f.op())) {
          Formula lhs = rename(f.lhs());
          Formula rhs = rename(f.rhs());
          return f.with_children(lhs, rhs);
        }
        return f;
    }
  }

 private:
  std::string fresh_name(const std::string& base) {
    for (;;) {
      std::string candidate = base + std::to_string(++counter_);
      if (issued_.insert(candidate).second) return candidate;
    }
  }

  std::map<std::string, std::vector<std::string>> scope_;
  std::set<std::string> issued_;
  int counter_ = 0;
};

}  // namespace

Formula alpha_rename(const Formula& f) { return Renamer().rename(f); }

std::vector<std::string> bound_variables(const Formula& f) {
  std::vector<std::string> out;
  std::vector<std::string> binders;
  NodePath path;
  walk(f, binders, path, [&](const Formula& node, const std::vector<std::string>&, const NodePath&) {
    if (node.op() == Op::Freeze) out.push_back(node.name());
    return true;
  });
  return out;
}

}  // namespace tptl
