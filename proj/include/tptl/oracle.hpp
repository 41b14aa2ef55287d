#pragma once

// Reference evaluators.  Both recurse directly on the satisfaction relation
// with no memoization; they are slow by design and meant for traces of a
// dozen samples.

#include <map>
#include <stdexcept>
#include <string>

#include "tptl/formula.hpp"
#include "tptl/mtl.hpp"
#include "tptl/trace.hpp"

namespace tptl {

/// Frozen timestamps by variable; the empty map is the all-zero environment
/// of a closed formula.
using Environment = std::map<std::string, double>;

class UnboundVariableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// (trace, i, env) |= f.  Accepts any closed TPTL formula, encapsulated or
/// not.  Throws UnboundVariableError if a constraint's variable is missing
/// from env.
bool eval_semantics(const Formula& f, const TimedStateSequence& trace, std::size_t i,
                    const Environment& env = {});

/// Point-based finite-trace MTL semantics.
bool eval_mtl(const MtlFormula& m, const TimedStateSequence& trace, std::size_t i);

}  // namespace tptl
