#pragma once

// Bracket expressions over A and B: constructive witnesses that an element
// is a Lie polynomial. Nodes are immutable and shared, so repeated subtrees
// (e.g. C = [A,B] inside long ad-chains) cost nothing to copy.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qheis/element.hpp"

namespace qheis {

class BracketExpr {
 public:
  enum class Kind { LeafA, LeafB, Bracket, ScaledSum };
  using Term = std::pair<Scalar, BracketExpr>;

  static BracketExpr a();
  static BracketExpr b();
  static BracketExpr c() { return bracket(a(), b()); }
  static BracketExpr bracket(BracketExpr left, BracketExpr right);
  static BracketExpr scaled_sum(std::vector<Term> terms);
  static BracketExpr scaled(const Scalar& s, BracketExpr e) { return scaled_sum({{s, std::move(e)}}); }

  Kind kind() const;
  const BracketExpr& left() const;
  const BracketExpr& right() const;
  const std::vector<Term>& terms() const;

  // Nesting depth of brackets; leaves have depth 0.
  int depth() const;

  // "[x, y]" for brackets, "(c1)*e1 + (c2)*e2" for scaled sums.
  std::string to_string() const;

  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Recursive evaluation with shared subtrees evaluated once.
Element eval_bracket_expr(const BracketExpr& e, const ScalarContext& ctx);

}  // namespace qheis
