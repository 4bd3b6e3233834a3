#include "expr.hpp"

#include <cctype>

#include "qheis/algebra.hpp"
#include "qheis/free_algebra.hpp"

namespace qheis::cli {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

using Node = std::unique_ptr<ExprAst>;

Node make(ExprAst::Kind kind, int line, int column) {
  auto n = std::make_unique<ExprAst>();
  n->kind = kind;
  n->line = line;
  n->column = column;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Node parse() {
    Node e = expr();
    skip_space();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
    advance();
  }

  Node expr() {
    Node left = term();
    while (peek('+') || peek('-')) {
      const int line = line_, col = col_;
      const char op = s_[pos_];
      advance();
      Node n = make(op == '+' ? ExprAst::Kind::Sum : ExprAst::Kind::Difference, line, col);
      n->children.push_back(std::move(left));
      n->children.push_back(term());
      left = std::move(n);
    }
    return left;
  }

  Node term() {
    Node left = unary();
    while (peek('*') || peek('/')) {
      const int line = line_, col = col_;
      const char op = s_[pos_];
      advance();
      Node n = make(op == '*' ? ExprAst::Kind::Product : ExprAst::Kind::Quotient, line, col);
      n->children.push_back(std::move(left));
      n->children.push_back(unary());
      left = std::move(n);
    }
    return left;
  }

  Node unary() {
    if (peek('-')) {
      Node n = make(ExprAst::Kind::Negate, line_, col_);
      advance();
      n->children.push_back(unary());
      return n;
    }
    return factor();
  }

  Node factor() {
    Node base = atom();
    if (peek('^')) {
      Node n = make(ExprAst::Kind::Power, line_, col_);
      advance();
      skip_space();
      const int line = line_, col = col_;
      const std::string digits = natural();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 9 || std::stol(digits) > kMaxExponent)
        throw ParseError("exponent overflow: " + digits + " exceeds " + std::to_string(kMaxExponent), line, col);
      n->exponent = std::stol(digits);
      n->children.push_back(std::move(base));
      return n;
    }
    return base;
  }

  std::string natural() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      digits += s_[pos_];
      advance();
    }
    return digits;
  }

  Node atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const int line = line_, col = col_;
    const char c = s_[pos_];
    switch (c) {
      case 'A':
        advance();
        return make(ExprAst::Kind::LetterA, line, col);
      case 'B':
        advance();
        return make(ExprAst::Kind::LetterB, line, col);
      case 'C':
        advance();
        return make(ExprAst::Kind::LetterC, line, col);
      case 'I':
        advance();
        return make(ExprAst::Kind::Identity, line, col);
      case 'q':
        advance();
        return make(ExprAst::Kind::Q, line, col);
      case '(': {
        advance();
        Node e = expr();
        expect(')');
        return e;
      }
      case '[': {
        advance();
        Node n = make(ExprAst::Kind::Bracket, line, col);
        n->children.push_back(expr());
        expect(',');
        n->children.push_back(expr());
        expect(']');
        return n;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node n = make(ExprAst::Kind::Number, line, col);
      n->number = natural();
      return n;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Collects the factors of a chain of '*' nodes, left to right.
void flatten_product(const ExprAst& e, std::vector<const ExprAst*>& out) {
  if (e.kind == ExprAst::Kind::Product) {
    flatten_product(*e.children[0], out);
    flatten_product(*e.children[1], out);
  } else {
    out.push_back(&e);
  }
}

// Appends the letters of A, B, A^n, B^n; false for anything else.
bool letters_of(const ExprAst& e, std::string& word) {
  if (e.kind == ExprAst::Kind::LetterA || e.kind == ExprAst::Kind::LetterB) {
    word += e.kind == ExprAst::Kind::LetterA ? 'A' : 'B';
    return true;
  }
  if (e.kind == ExprAst::Kind::Power) {
    const auto& base = *e.children[0];
    if (base.kind != ExprAst::Kind::LetterA && base.kind != ExprAst::Kind::LetterB) return false;
    word.append(static_cast<std::size_t>(e.exponent), base.kind == ExprAst::Kind::LetterA ? 'A' : 'B');
    return true;
  }
  return false;
}

Element scalar_element(const Scalar& s) { return Element::scalar(s); }

}  // namespace

std::string ExprAst::to_string() const {
  auto bin = [this](const char* op) {
    return "(" + children[0]->to_string() + " " + op + " " + children[1]->to_string() + ")";
  };
  switch (kind) {
    case Kind::Sum:
      return bin("+");
    case Kind::Difference:
      return bin("-");
    case Kind::Product:
      return bin("*");
    case Kind::Quotient:
      return bin("/");
    case Kind::Negate:
      return "-" + children[0]->to_string();
    case Kind::Power:
      return children[0]->to_string() + "^" + std::to_string(exponent);
    case Kind::Bracket:
      return "[" + children[0]->to_string() + ", " + children[1]->to_string() + "]";
    case Kind::LetterA:
      return "A";
    case Kind::LetterB:
      return "B";
    case Kind::LetterC:
      return "C";
    case Kind::Identity:
      return "I";
    case Kind::Q:
      return "q";
    case Kind::Number:
      return number;
  }
  return "?";
}

std::unique_ptr<ExprAst> parse_expression(const std::string& text) { return Parser(text).parse(); }

Element elaborate(const ExprAst& e, const ScalarContext& ctx) {
  switch (e.kind) {
    case ExprAst::Kind::Sum:
      return elaborate(*e.children[0], ctx) + elaborate(*e.children[1], ctx);
    case ExprAst::Kind::Difference:
      return elaborate(*e.children[0], ctx) - elaborate(*e.children[1], ctx);
    case ExprAst::Kind::Negate:
      return -elaborate(*e.children[0], ctx);
    case ExprAst::Kind::Product: {
      std::vector<const ExprAst*> factors;
      flatten_product(e, factors);
      // Runs of letters go through word rewriting; everything else multiplies.
      Element acc = scalar_element(Scalar::one(ctx));
      std::string word;
      auto flush = [&] {
        if (word.empty()) return;
        acc = multiply(acc, to_element(reduce_word(FreePoly(ctx, word)), ctx));
        word.clear();
      };
      for (const ExprAst* f : factors) {
        if (letters_of(*f, word)) continue;
        flush();
        acc = multiply(acc, elaborate(*f, ctx));
      }
      flush();
      return acc;
    }
    case ExprAst::Kind::Quotient: {
      const Element num = elaborate(*e.children[0], ctx);
      const Element den = elaborate(*e.children[1], ctx);
      if (den.is_zero()) throw ElaborationError("division by zero", e.line, e.column);
      if (den.size() != 1 || !den.contains(Monomial::identity()))
        throw ElaborationError("divisor is not a scalar: " + den.to_string(), e.line, e.column);
      try {
        return num * den.coefficient(Monomial::identity()).inverse();
      } catch (const std::domain_error& err) {
        throw ElaborationError(err.what(), e.line, e.column);
      }
    }
    case ExprAst::Kind::Power: {
      const auto& base = *e.children[0];
      if (base.kind == ExprAst::Kind::Q) return scalar_element(Scalar::q_power(ctx, e.exponent));
      std::string word;
      if (letters_of(e, word)) return to_element(reduce_word(FreePoly(ctx, word)), ctx);
      return power(elaborate(base, ctx), e.exponent);
    }
    case ExprAst::Kind::Bracket:
      return commutator(elaborate(*e.children[0], ctx), elaborate(*e.children[1], ctx));
    case ExprAst::Kind::LetterA:
      return Element::gen_a(ctx);
    case ExprAst::Kind::LetterB:
      return Element::gen_b(ctx);
    case ExprAst::Kind::LetterC:
      return Element::gen_c(ctx);
    case ExprAst::Kind::Identity:
      return scalar_element(Scalar::one(ctx));
    case ExprAst::Kind::Q:
      return scalar_element(Scalar::q_power(ctx, 1));
    case ExprAst::Kind::Number:
      return scalar_element(Scalar(ctx, Rational(Integer(e.number))));
  }
  throw ElaborationError("unknown node", e.line, e.column);
}

Element evaluate(const std::string& text, const ScalarContext& ctx) { return elaborate(*parse_expression(text), ctx); }

}  // namespace qheis::cli
