#pragma once

// Point-based MTL over closed intervals and its embedding into encapsulated
// TPTL: every interval-decorated operator becomes a freeze over a fresh
// variable whose constraints encode the interval.

#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "tptl/formula.hpp"

namespace tptl {

/// Closed interval [lower, upper]; upper may be +infinity.
struct Interval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();

  bool unbounded() const { return upper == std::numeric_limits<double>::infinity(); }
  /// [0, inf] imposes no timing requirement.
  bool trivial() const { return lower == 0.0 && unbounded(); }
  bool contains(double d) const { return lower <= d && d <= upper; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class MtlOp { True, Prop, Not, And, Or, Implies, Next, Until, Eventually, Always, Release };

class MtlFormula {
 public:
  MtlFormula();

  static MtlFormula top();
  static MtlFormula bottom();
  static MtlFormula prop(std::string name);
  static MtlFormula negation(MtlFormula child);
  static MtlFormula conjunction(MtlFormula lhs, MtlFormula rhs);
  static MtlFormula disjunction(MtlFormula lhs, MtlFormula rhs);
  static MtlFormula implication(MtlFormula lhs, MtlFormula rhs);
  static MtlFormula next(MtlFormula child);
  static MtlFormula until(MtlFormula lhs, MtlFormula rhs, Interval i = {});
  static MtlFormula release(MtlFormula lhs, MtlFormula rhs, Interval i = {});
  static MtlFormula eventually(MtlFormula child, Interval i = {});
  static MtlFormula always(MtlFormula child, Interval i = {});

  MtlOp op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Interval& interval() const { return node_->interval; }
  const MtlFormula& child() const { return *node_->lhs; }
  const MtlFormula& lhs() const { return *node_->lhs; }
  const MtlFormula& rhs() const { return *node_->rhs; }

  std::size_t size() const;

  friend bool operator==(const MtlFormula& a, const MtlFormula& b);

 private:
  struct Node {
    MtlOp op = MtlOp::True;
    std::string name;
    Interval interval;
    std::unique_ptr<const MtlFormula> lhs;
    std::unique_ptr<const MtlFormula> rhs;
  };
  explicit MtlFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static MtlFormula make(MtlOp op, std::string name, Interval interval, const MtlFormula* lhs,
                         const MtlFormula* rhs);

  std::shared_ptr<const Node> node_;
};

/// Same grammar as parse(), without freeze or constraints, and with an
/// optional `[l,u]` suffix on U, R, F and G (`u` may be `inf`).
MtlFormula parse_mtl(std::string_view text);

std::string to_string(const MtlFormula& f);

/// Rewrite into encapsulated TPTL:
///   a U[l,u] b  =>  x.(a U (x >= l /\ x <= u /\ b))
/// F, G and R with a non-trivial interval are first expanded through U
/// (F_I p = true U_I p, G_I p = !F_I !p, p R_I q = !(!p U_I !q)).
/// Operators over [0, inf] stay untimed.  Fresh variables are named x1,
/// x2, ... in pre-order.
Formula translate_mtl(const MtlFormula& m);

}  // namespace tptl
