#include "tricover/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "tricover/brill_noether.hpp"
#include "tricover/errors.hpp"

namespace tricover {

namespace {

enum class Tok { kInt, kX, kTheta, kBn1, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t position;  // 1-based
  std::string text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) {
    return "end of input";
  }
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t pos = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      out.push_back({Tok::kInt, pos, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      const std::string word(text.substr(i, j - i));
      if (word == "x") {
        out.push_back({Tok::kX, pos, word});
      } else if (word == "theta") {
        out.push_back({Tok::kTheta, pos, word});
      } else if (word == "bn1") {
        out.push_back({Tok::kBn1, pos, word});
      } else {
        throw ParseError(ParseErrorKind::kSyntax, pos,
                         "unknown symbol '" + word + "'; expected one of x, theta, bn1");
      }
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw ParseError(ParseErrorKind::kSyntax, pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, pos, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::kEnd, text.size() + 1, ""});
  return out;
}

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_node(ExprNode::Kind kind, std::size_t pos, BigInt value = 0, NodePtr lhs = nullptr,
                  NodePtr rhs = nullptr) {
  return std::make_shared<const ExprNode>(
      ExprNode{kind, pos, std::move(value), std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  NodePtr parse_all() {
    NodePtr root = expr();
    if (peek().kind != Tok::kEnd) {
      fail(peek(), "'+', '-', '*', '/', '^' or end of input");
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& take() { return tokens_[index_++]; }

  [[noreturn]] static void fail(const Token& at, const std::string& expected) {
    throw ParseError(ParseErrorKind::kSyntax, at.position,
                     "unexpected " + describe(at) + "; expected " + expected);
  }

  NodePtr expr() {
    NodePtr node = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token& op = take();
      NodePtr rhs = term();
      node = make_node(op.kind == Tok::kPlus ? ExprNode::Kind::kAdd : ExprNode::Kind::kSub,
                       op.position, 0, node, rhs);
    }
    return node;
  }

  NodePtr term() {
    NodePtr node = factor();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token& op = take();
      if (op.kind == Tok::kStar) {
        node = make_node(ExprNode::Kind::kMul, op.position, 0, node, factor());
        continue;
      }
      const Token& divisor = peek();
      if (divisor.kind != Tok::kInt) {
        fail(divisor, "positive integer literal after '/'");
      }
      take();
      BigInt value(divisor.text, 10);
      if (value == 0) {
        throw ParseError(ParseErrorKind::kDivisionByZero, divisor.position, "division by zero");
      }
      node = make_node(ExprNode::Kind::kDiv, op.position, value, node);
    }
    return node;
  }

  NodePtr factor() {
    NodePtr node = atom();
    if (peek().kind == Tok::kCaret) {
      const Token& op = take();
      const Token& exponent = peek();
      if (exponent.kind != Tok::kInt) {
        throw ParseError(ParseErrorKind::kBadExponent, exponent.position,
                         "exponent must be a nonnegative integer literal, got " + describe(exponent));
      }
      take();
      BigInt value(exponent.text, 10);
      if (!value.fits_slong_p()) {
        throw ParseError(ParseErrorKind::kBadExponent, exponent.position, "exponent too large");
      }
      node = make_node(ExprNode::Kind::kPow, op.position, value, node);
    }
    return node;
  }

  NodePtr signed_int(const std::string& what) {
    const Token& first = peek();
    bool negative = false;
    if (first.kind == Tok::kMinus) {
      negative = true;
      take();
    }
    const Token& digits = peek();
    if (digits.kind != Tok::kInt) {
      fail(digits, what);
    }
    take();
    BigInt value(digits.text, 10);
    if (negative) {
      value = -value;
    }
    return make_node(ExprNode::Kind::kInteger, first.position, value);
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt:
      case Tok::kMinus:
        return signed_int("integer literal");
      case Tok::kX:
        take();
        return make_node(ExprNode::Kind::kX, t.position);
      case Tok::kTheta:
        take();
        return make_node(ExprNode::Kind::kTheta, t.position);
      case Tok::kBn1: {
        take();
        if (peek().kind != Tok::kLParen) {
          fail(peek(), "'(' after bn1");
        }
        take();
        NodePtr index = signed_int("integer index inside bn1(...)");
        if (peek().kind != Tok::kRParen) {
          fail(peek(), "')'");
        }
        take();
        return make_node(ExprNode::Kind::kBn1, t.position, index->value);
      }
      case Tok::kLParen: {
        take();
        NodePtr inner = expr();
        if (peek().kind != Tok::kRParen) {
          fail(peek(), "')'");
        }
        take();
        return inner;
      }
      default:
        fail(t, "integer, x, theta, bn1 or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

std::string monomial_text(Monomial m) {
  std::string out;
  if (m.x_pow > 0) {
    out += "x";
    if (m.x_pow > 1) {
      out += "^" + std::to_string(m.x_pow);
    }
  }
  if (m.theta_pow > 0) {
    if (!out.empty()) {
      out += "*";
    }
    out += "theta";
    if (m.theta_pow > 1) {
      out += "^" + std::to_string(m.theta_pow);
    }
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(long g, long d, std::vector<std::string>* notes) : g_(g), d_(d), notes_(notes) {}

  CohomClass eval(const ExprNode& n) {
    using K = ExprNode::Kind;
    switch (n.kind) {
      case K::kInteger:
        return CohomClass::unit(g_, d_) * Rat(n.value);
      case K::kX:
        return monomial(Monomial{1, 0});
      case K::kTheta:
        return monomial(Monomial{0, 1});
      case K::kBn1: {
        if (n.value != d_ || d_ < 1) {
          throw ParseError(ParseErrorKind::kBn1Mismatch, n.position,
                           "bn1(" + n.value.get_str() + ") must use the ambient index d=" +
                               std::to_string(d_) + " (and d >= 1)");
        }
        return bn1_class(g_, d_);
      }
      case K::kAdd:
        return eval(*n.lhs) + eval(*n.rhs);
      case K::kSub:
        return eval(*n.lhs) - eval(*n.rhs);
      case K::kMul:
        return multiply(eval(*n.lhs), eval(*n.rhs));
      case K::kDiv:
        return eval(*n.lhs) * Rat(BigInt(1), n.value);
      case K::kPow:
        return raise(eval(*n.lhs), n.value.get_si());
    }
    throw ContractError("unknown expression node");
  }

 private:
  CohomClass monomial(Monomial m) {
    CohomClass c(g_, d_);
    if (!c.add_term(m, Rat(1))) {
      note(m);
    }
    return c;
  }

  void note(Monomial m) {
    if (notes_ == nullptr) {
      return;
    }
    std::ostringstream msg;
    msg << monomial_text(m) << " vanishes in X_" << d_ << " of genus " << g_ << " (";
    if (m.codim() > d_) {
      msg << "codimension " << m.codim() << " > " << d_;
    } else {
      msg << "theta power " << m.theta_pow << " > " << g_;
    }
    msg << ")";
    notes_->push_back(msg.str());
  }

  CohomClass multiply(const CohomClass& a, const CohomClass& b) {
    CohomClass out(g_, d_);
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        const Monomial m{ma.x_pow + mb.x_pow, ma.theta_pow + mb.theta_pow};
        if (!out.add_term(m, ca * cb)) {
          note(m);
        }
      }
    }
    return out;
  }

  CohomClass raise(CohomClass base, long n) {
    CohomClass result = CohomClass::unit(g_, d_);
    while (n > 0) {
      if (n & 1) {
        result = multiply(result, base);
      }
      n >>= 1;
      if (n > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  long g_;
  long d_;
  std::vector<std::string>* notes_;
};

}  // namespace

ClassExpr parse_expr(std::string_view text) {
  Parser parser(tokenize(text));
  return ClassExpr(parser.parse_all());
}

CohomClass evaluate(const ClassExpr& expr, long g, long d, std::vector<std::string>* notes) {
  Evaluator ev(g, d, notes);
  return ev.eval(expr.root());
}

CohomClass parse(std::string_view text, long g, long d, std::vector<std::string>* notes) {
  return evaluate(parse_expr(text), g, d, notes);
}

std::string format(const CohomClass& c) {
  if (c.is_zero()) {
    return "0";
  }
  std::string out;
  bool leading = true;
  for (const auto& [m, coeff] : c.terms()) {
    const bool negative = coeff.sign() < 0;
    const Rat magnitude = negative ? -coeff : coeff;
    const std::string mono = monomial_text(m);
    std::string body;
    if (mono.empty()) {
      body = magnitude.to_string();
    } else if (magnitude == Rat(1)) {
      // A leading "-x" is not in the grammar; spell the unit coefficient.
      body = (leading && negative) ? "1*" + mono : mono;
    } else {
      body = magnitude.to_string() + "*" + mono;
    }
    if (leading) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    leading = false;
  }
  return out;
}

}  // namespace tricover
