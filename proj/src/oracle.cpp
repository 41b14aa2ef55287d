#include "tptl/oracle.hpp"

namespace tptl {

namespace {

// exists j in [i, n) with rhs(j) and lhs(k) for all k in [i, j), where j is
// further restricted to tau_j - tau_i in `window`.
template <typename L, typename R>
bool until(const TimedStateSequence& trace, std::size_t i, const Interval& window, L&& lhs,
           R&& rhs) {
  for (std::size_t j = i; j < trace.size(); ++j) {
    const double d = trace.time(j) - trace.time(i);
    if (d > window.upper) return false;
    if (window.contains(d) && rhs(j)) return true;
    if (!lhs(j)) return false;
  }
  return false;
}

bool eval(const Formula& f, const TimedStateSequence& trace, std::size_t i,
          const Environment& env) {
  const Interval always_open;
  auto at = [&](const Formula& g) { return [&, p = &g](std::size_t k) { return eval(*p, trace, k, env); }; };
  auto not_at = [&](const Formula& g) {
    return [&, p = &g](std::size_t k) { return !eval(*p, trace, k, env); };
  };
  auto yes = [](std::size_t) { return true; };
  switch (f.op()) {
    case Op::True: return true;
    case Op::Prop: return trace.holds(f.name(), i);
    case Op::Not: return !eval(f.child(), trace, i, env);
    case Op::And: return eval(f.lhs(), trace, i, env) && eval(f.rhs(), trace, i, env);
    case Op::Or: return eval(f.lhs(), trace, i, env) || eval(f.rhs(), trace, i, env);
    case Op::Implies: return !eval(f.lhs(), trace, i, env) || eval(f.rhs(), trace, i, env);
    case Op::Next: return i + 1 < trace.size() && eval(f.child(), trace, i + 1, env);
    case Op::Until: return until(trace, i, always_open, at(f.lhs()), at(f.rhs()));
    case Op::Eventually: return until(trace, i, always_open, yes, at(f.child()));
    case Op::Always: return !until(trace, i, always_open, yes, not_at(f.child()));
    case Op::Release:
      return !until(trace, i, always_open, not_at(f.lhs()), not_at(f.rhs()));
    case Op::Constraint: {
      auto it = env.find(f.name());
      if (it == env.end()) throw UnboundVariableError("unbound variable '" + f.name() + "'");
      return compare(trace.time(i) - it->second, f.relation(), f.bound());
    }
    case Op::Freeze: {
      Environment inner = env;
      inner[f.name()] = trace.time(i);
      return eval(f.child(), trace, i, inner);
    }
  }
  return false;
}

bool eval_m(const MtlFormula& m, const TimedStateSequence& trace, std::size_t i) {
  auto at = [&](const MtlFormula& g) { return [&, p = &g](std::size_t k) { return eval_m(*p, trace, k); }; };
  auto not_at = [&](const MtlFormula& g) {
    return [&, p = &g](std::size_t k) { return !eval_m(*p, trace, k); };
  };
  auto yes = [](std::size_t) { return true; };
  switch (m.op()) {
    case MtlOp::True: return true;
    case MtlOp::Prop: return trace.holds(m.name(), i);
    case MtlOp::Not: return !eval_m(m.child(), trace, i);
    case MtlOp::And: return eval_m(m.lhs(), trace, i) && eval_m(m.rhs(), trace, i);
    case MtlOp::Or: return eval_m(m.lhs(), trace, i) || eval_m(m.rhs(), trace, i);
    case MtlOp::Implies: return !eval_m(m.lhs(), trace, i) || eval_m(m.rhs(), trace, i);
    case MtlOp::Next: return i + 1 < trace.size() && eval_m(m.child(), trace, i + 1);
    case MtlOp::Until: return until(trace, i, m.interval(), at(m.lhs()), at(m.rhs()));
    case MtlOp::Eventually: return until(trace, i, m.interval(), yes, at(m.child()));
    case MtlOp::Always: return !until(trace, i, m.interval(), yes, not_at(m.child()));
    case MtlOp::Release:
      return !until(trace, i, m.interval(), not_at(m.lhs()), not_at(m.rhs()));
  }
  return false;
}

}  // namespace

bool eval_semantics(const Formula& f, const TimedStateSequence& trace, std::size_t i,
                    const Environment& env) {
  if (i >= trace.size()) throw std::out_of_range("sample index past end of trace");
  return eval(f, trace, i, env);
}

bool eval_mtl(const MtlFormula& m, const TimedStateSequence& trace, std::size_t i) {
  if (i >= trace.size()) throw std::out_of_range("sample index past end of trace");
  return eval_m(m, trace, i);
}

}  // namespace tptl
