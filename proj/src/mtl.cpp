#include "tptl/mtl.hpp"

#include "lexer.hpp"
#include "tptl/parser.hpp"

namespace tptl {

MtlFormula::MtlFormula() : MtlFormula(top()) {}

MtlFormula MtlFormula::make(MtlOp op, std::string name, Interval interval, const MtlFormula* lhs,
                            const MtlFormula* rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->interval = interval;
  if (lhs) n->lhs = std::make_unique<const MtlFormula>(*lhs);
  if (rhs) n->rhs = std::make_unique<const MtlFormula>(*rhs);
  return MtlFormula(std::move(n));
}

MtlFormula MtlFormula::top() { return make(MtlOp::True, {}, {}, nullptr, nullptr); }
MtlFormula MtlFormula::bottom() { return negation(top()); }
MtlFormula MtlFormula::prop(std::string name) {
  return make(MtlOp::Prop, std::move(name), {}, nullptr, nullptr);
}
MtlFormula MtlFormula::negation(MtlFormula c) { return make(MtlOp::Not, {}, {}, &c, nullptr); }
MtlFormula MtlFormula::conjunction(MtlFormula l, MtlFormula r) {
  return make(MtlOp::And, {}, {}, &l, &r);
}
MtlFormula MtlFormula::disjunction(MtlFormula l, MtlFormula r) {
  return make(MtlOp::Or, {}, {}, &l, &r);
}
MtlFormula MtlFormula::implication(MtlFormula l, MtlFormula r) {
  return make(MtlOp::Implies, {}, {}, &l, &r);
}
MtlFormula MtlFormula::next(MtlFormula c) { return make(MtlOp::Next, {}, {}, &c, nullptr); }
MtlFormula MtlFormula::until(MtlFormula l, MtlFormula r, Interval i) {
  return make(MtlOp::Until, {}, i, &l, &r);
}
MtlFormula MtlFormula::release(MtlFormula l, MtlFormula r, Interval i) {
  return make(MtlOp::Release, {}, i, &l, &r);
}
MtlFormula MtlFormula::eventually(MtlFormula c, Interval i) {
  return make(MtlOp::Eventually, {}, i, &c, nullptr);
}
MtlFormula MtlFormula::always(MtlFormula c, Interval i) {
  return make(MtlOp::Always, {}, i, &c, nullptr);
}

std::size_t MtlFormula::size() const {
  std::size_t n = 1;
  if (node_->lhs) n += node_->lhs->size();
  if (node_->rhs) n += node_->rhs->size();
  return n;
}

bool operator==(const MtlFormula& a, const MtlFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name || !(x.interval == y.interval)) return false;
  if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
  if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
  return (!x.lhs || *x.lhs == *y.lhs) && (!x.rhs || *x.rhs == *y.rhs);
}

namespace {

using detail::Tok;
using detail::TokenStream;

class MtlParser {
 public:
  explicit MtlParser(std::string_view text) : in_(text) {}

  MtlFormula run() {
    MtlFormula f = implies();
    if (!in_.at(Tok::End)) in_.fail({"'->'", "'\\/'", "'/\\'", "'U'", "'R'", "end of input"});
    return f;
  }

 private:
  MtlFormula implies() {
    MtlFormula lhs = disjunction();
    if (in_.accept(Tok::Implies)) return MtlFormula::implication(lhs, implies());
    return lhs;
  }
  MtlFormula disjunction() {
    MtlFormula f = conjunction();
    while (in_.accept(Tok::Or)) f = MtlFormula::disjunction(f, conjunction());
    return f;
  }
  MtlFormula conjunction() {
    MtlFormula f = until();
    while (in_.accept(Tok::And)) f = MtlFormula::conjunction(f, until());
    return f;
  }
  MtlFormula until() {
    MtlFormula lhs = unary();
    if (in_.accept(Tok::Until)) {
      Interval i = interval();
      return MtlFormula::until(lhs, until(), i);
    }
    if (in_.accept(Tok::Release)) {
      Interval i = interval();
      return MtlFormula::release(lhs, until(), i);
    }
    return lhs;
  }
  MtlFormula unary() {
    switch (in_.peek().kind) {
      case Tok::Not: in_.advance(); return MtlFormula::negation(unary());
      case Tok::Next: in_.advance(); return MtlFormula::next(unary());
      case Tok::Eventually: {
        in_.advance();
        Interval i = interval();
        return MtlFormula::eventually(unary(), i);
      }
      case Tok::Always: {
        in_.advance();
        Interval i = interval();
        return MtlFormula::always(unary(), i);
      }
      default: return atom();
    }
  }
  MtlFormula atom() {
    switch (in_.peek().kind) {
      case Tok::True: in_.advance(); return MtlFormula::top();
      case Tok::False: in_.advance(); return MtlFormula::bottom();
      case Tok::LParen: {
        in_.advance();
        MtlFormula f = implies();
        in_.expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        if (in_.peek(1).kind == Tok::Dot) in_.fail({}, "freeze quantifiers are not MTL syntax");
        if (in_.peek(1).kind == Tok::Cmp) in_.fail({}, "time constraints are not MTL syntax");
        return MtlFormula::prop(in_.advance().text);
      default:
        in_.fail({"'!'", "'X'", "'F'", "'G'", "'('", "'true'", "'false'", "identifier"});
    }
  }

  // Optional `[l,u]`; absent means [0, inf].
  Interval interval() {
    Interval i;
    if (!in_.accept(Tok::LBracket)) return i;
    i.lower = in_.expect(Tok::Number, "number").number;
    in_.expect(Tok::Comma, "','");
    if (in_.at(Tok::Ident) && in_.peek().text == "inf") {
      in_.advance();
    } else {
      i.upper = in_.expect(Tok::Number, "number or 'inf'").number;
    }
    if (i.upper < i.lower) in_.fail({}, "interval upper bound below lower bound");
    in_.expect(Tok::RBracket, "']'");
    return i;
  }

  TokenStream in_;
};

std::string interval_suffix(const Interval& i) {
  if (i.trivial()) return {};
  return "[" + format_number(i.lower) + "," + (i.unbounded() ? "inf" : format_number(i.upper)) +
         "]";
}

void print(const MtlFormula& f, std::string& out) {
  auto operand = [&](const MtlFormula& g) {
    bool atomic = g.op() == MtlOp::True || g.op() == MtlOp::Prop;
    if (!atomic) out += '(';
    print(g, out);
    if (!atomic) out += ')';
  };
  switch (f.op()) {
    case MtlOp::True: out += "true"; return;
    case MtlOp::Prop: out += f.name(); return;
    case MtlOp::Not:
      if (f.child().op() == MtlOp::True) {
        out += "false";
        return;
      }
      out += '!';
      operand(f.child());
      return;
    case MtlOp::Next: out += "X "; operand(f.child()); return;
    case MtlOp::Eventually:
      out += "F" + interval_suffix(f.interval()) + " ";
      operand(f.child());
      return;
    case MtlOp::Always:
      out += "G" + interval_suffix(f.interval()) + " ";
      operand(f.child());
      return;
    default: break;
  }
  const char* symbol = "";
  std::string suffix;
  switch (f.op()) {
    case MtlOp::And: symbol = " /\\ "; break;
    case MtlOp::Or: symbol = " \\/ "; break;
    case MtlOp::Implies: symbol = " -> "; break;
    case MtlOp::Until: symbol = " U"; suffix = interval_suffix(f.interval()) + " "; break;
    case MtlOp::Release: symbol = " R"; suffix = interval_suffix(f.interval()) + " "; break;
    default: break;
  }
  operand(f.lhs());
  out += symbol;
  out += suffix;
  operand(f.rhs());
}

class Translator {
 public:
  Formula translate(const MtlFormula& m) {
    switch (m.op()) {
      case MtlOp::True: return Formula::top();
      case MtlOp::Prop: return Formula::prop(m.name());
      case MtlOp::Not: return Formula::negation(translate(m.child()));
      case MtlOp::Next: return Formula::next(translate(m.child()));
      case MtlOp::And: return binary(m, &Formula::conjunction);
      case MtlOp::Or: return binary(m, &Formula::disjunction);
      case MtlOp::Implies: return binary(m, &Formula::implication);
      case MtlOp::Until:
        if (m.interval().trivial()) return binary(m, &Formula::until);
        return timed_until(m.interval(), [&] { return translate(m.lhs()); },
                           [&] { return translate(m.rhs()); });
      case MtlOp::Eventually:
        if (m.interval().trivial()) return Formula::eventually(translate(m.child()));
        return timed_until(m.interval(), [] { return Formula::top(); },
                           [&] { return translate(m.child()); });
      case MtlOp::Always:
        if (m.interval().trivial()) return Formula::always(translate(m.child()));
        return Formula::negation(
            timed_until(m.interval(), [] { return Formula::top(); },
                        [&] { return Formula::negation(translate(m.child())); }));
      case MtlOp::Release:
        if (m.interval().trivial()) return binary(m, &Formula::release);
        return Formula::negation(
            timed_until(m.interval(), [&] { return Formula::negation(translate(m.lhs())); },
                        [&] { return Formula::negation(translate(m.rhs())); }));
    }
    return Formula::top();
  }

 private:
  Formula binary(const MtlFormula& m, Formula (*build)(Formula, Formula)) {
    Formula lhs = translate(m.lhs());
    Formula rhs = translate(m.rhs());
    return build(lhs, rhs);
  }

  // x.(lhs U (x >= l /\ x <= u /\ rhs)); the variable is allocated before
  // the operands so numbering follows pre-order.
  template <typename Lhs, typename Rhs>
  Formula timed_until(const Interval& i, Lhs&& lhs_fn, Rhs&& rhs_fn) {
    std::string var = "x" + std::to_string(++counter_);
    Formula lhs = lhs_fn();
    Formula rhs = rhs_fn();
    Formula window = Formula::constraint(var, Relation::Ge, i.lower);
    if (!i.unbounded()) {
      window = Formula::conjunction(window, Formula::constraint(var, Relation::Le, i.upper));
    }
    return Formula::freeze(var, Formula::until(lhs, Formula::conjunction(window, rhs)));
  }

  int counter_ = 0;
};

}  // namespace

MtlFormula parse_mtl(std::string_view text) { return MtlParser(text).run(); }

std::string to_string(const MtlFormula& f) {
  std::string out;
  print(f, out);
  return out;
}

Formula translate_mtl(const MtlFormula& m) { return Translator().translate(m); }

}  // namespace tptl
