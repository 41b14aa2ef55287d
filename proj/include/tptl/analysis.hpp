#pragma once

// Static checks and rewrites on TPTL formulas: closedness, the
// independent-variable ("encapsulated") fragment, and alpha-renaming.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

/// Location of a node inside a formula, rendered as the chain of operators
/// from the root, e.g. "G > x. > F > /\.rhs > y.".
struct NodePath {
  std::vector<std::string> steps;
  std::string str() const;
};

struct UnboundVariable {
  std::string variable;
  std::string subformula;
  NodePath path;
};

struct ClosureReport {
  std::vector<UnboundVariable> unbound;
  bool ok() const { return unbound.empty(); }
  std::string message() const;
};

ClosureReport validate_closed(const Formula& f);

struct EncapsulationWitness {
  enum class Kind {
    /// A constraint mentions a variable other than its innermost binder's.
    ForeignVariable,
    /// A freeze re-binds a variable already bound by an enclosing freeze.
    Shadowing,
    /// A constraint with no enclosing freeze at all.
    Unbound,
  };
  Kind kind;
  std::string variable;
  /// Innermost enclosing binder at the offending node ("" when none).
  std::string binder;
  std::string subformula;
  NodePath path;
};

struct EncapsulationReport {
  std::optional<EncapsulationWitness> witness;
  bool encapsulated() const { return !witness.has_value(); }
  std::string message() const;
};

/// Every freeze body may mention only its own variable; nested freezes
/// must bind names not already in scope.
EncapsulationReport check_encapsulated(const Formula& f);

/// Give every binder a fresh, unique variable name (`<name><n>`, n counted
/// in pre-order from 1) and rewrite its constraints to match.
Formula alpha_rename(const Formula& f);

/// Thrown when a formula is handed to the monitor pipeline without being
/// closed and encapsulated.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variables bound by freeze nodes, in pre-order (duplicates kept).
std::vector<std::string> bound_variables(const Formula& f);

}  // namespace tptl
