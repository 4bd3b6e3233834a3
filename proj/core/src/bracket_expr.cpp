#include "qheis/bracket_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "qheis/algebra.hpp"

namespace qheis {

struct BracketExpr::Node {
  Kind kind;
  std::vector<BracketExpr> children;  // two for Bracket
  std::vector<Term> terms;            // for ScaledSum
};

BracketExpr BracketExpr::a() {
  static const auto node = std::make_shared<const Node>(Node{Kind::LeafA, {}, {}});
  return BracketExpr(node);
}

BracketExpr BracketExpr::b() {
  static const auto node = std::make_shared<const Node>(Node{Kind::LeafB, {}, {}});
  return BracketExpr(node);
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
  return BracketExpr(std::make_shared<const Node>(Node{Kind::Bracket, {std::move(left), std::move(right)}, {}}));
}

BracketExpr BracketExpr::scaled_sum(std::vector<Term> terms) {
  if (terms.empty()) throw std::invalid_argument("empty scaled sum");
  return BracketExpr(std::make_shared<const Node>(Node{Kind::ScaledSum, {}, std::move(terms)}));
}

BracketExpr::Kind BracketExpr::kind() const { return node_->kind; }

const BracketExpr& BracketExpr::left() const {
  if (node_->kind != Kind::Bracket) throw std::logic_error("left() on a non-bracket node");
  return node_->children[0];
}

const BracketExpr& BracketExpr::right() const {
  if (node_->kind != Kind::Bracket) throw std::logic_error("right() on a non-bracket node");
  return node_->children[1];
}

const std::vector<BracketExpr::Term>& BracketExpr::terms() const {
  if (node_->kind != Kind::ScaledSum) throw std::logic_error("terms() on a non-sum node");
  return node_->terms;
}

int BracketExpr::depth() const {
  switch (node_->kind) {
    case Kind::LeafA:
    case Kind::LeafB:
      return 0;
    case Kind::Bracket:
      return 1 + std::max(left().depth(), right().depth());
    case Kind::ScaledSum: {
      int d = 0;
      for (const auto& [c, e] : node_->terms) d = std::max(d, e.depth());
      return d;
    }
  }
  return 0;
}

std::string BracketExpr::to_string() const {
  switch (node_->kind) {
    case Kind::LeafA:
      return "A";
    case Kind::LeafB:
      return "B";
    case Kind::Bracket:
      return "[" + left().to_string() + ", " + right().to_string() + "]";
    case Kind::ScaledSum: {
      std::string out;
      for (const auto& [c, e] : node_->terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + e.to_string();
      }
      return node_->terms.size() > 1 ? "{" + out + "}" : out;
    }
  }
  return {};
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const ScalarContext& ctx) : ctx_(ctx) {}

  Element eval(const BracketExpr& e) {
    if (auto it = cache_.find(e.id()); it != cache_.end()) return it->second;
    Element out(ctx_);
    switch (e.kind()) {
      case BracketExpr::Kind::LeafA:
        out = Element::gen_a(ctx_);
        break;
      case BracketExpr::Kind::LeafB:
        out = Element::gen_b(ctx_);
        break;
      case BracketExpr::Kind::Bracket:
        out = commutator(eval(e.left()), eval(e.right()));
        break;
      case BracketExpr::Kind::ScaledSum:
        for (const auto& [c, sub] : e.terms()) {
          if (c.context() != ctx_) throw ContextMismatch("bracket expression scalar from a different context");
          out += c * eval(sub);
        }
        break;
    }
    return cache_.emplace(e.id(), std::move(out)).first->second;
  }

 private:
  const ScalarContext& ctx_;
  std::unordered_map<const void*, Element> cache_;
};

}  // namespace

Element eval_bracket_expr(const BracketExpr& e, const ScalarContext& ctx) {
  Evaluator ev(ctx);
  return ev.eval(e);
}

}  // namespace qheis
