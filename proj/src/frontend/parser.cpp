#include "ore/frontend/parser.hpp"

#include <cctype>

namespace ore {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GAlgebra& alg, const NameLookup& lookup)
      : text_(text), alg_(alg), lookup_(lookup) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.position = pos;
    e.args = std::move(args);
    return e;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('+'))
        lhs = node(Expr::Kind::Sum, at, {std::move(lhs), product()});
      else if (accept('-'))
        lhs = node(Expr::Kind::Difference, at, {std::move(lhs), product()});
      else
        return lhs;
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('*'))
        lhs = node(Expr::Kind::Product, at, {std::move(lhs), unary()});
      else if (accept('/'))
        lhs = node(Expr::Kind::Quotient, at, {std::move(lhs), unary()});
      else
        return lhs;
    }
  }

  Expr unary() {
    skip();
    std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::Negate, at, {unary()});
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError(pos_, "negative exponent");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an integer exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) throw ParseError(start, "exponent too large");
    Expr e = node(Expr::Kind::Power, at, {std::move(base)});
    e.exponent = static_cast<unsigned>(std::stoul(digits));
    return e;
  }

  Expr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      skip();
      if (!accept(')')) throw ParseError(pos_, pos_ >= text_.size() ? "unbalanced '('" : "expected ')'");
      return node(Expr::Kind::Group, at, {std::move(inner)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Expr e = node(Expr::Kind::Number, at, {});
      e.number = Rational(std::string(text_.substr(at, pos_ - at)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string id(text_.substr(at, pos_ - at));
      Expr e = node(Expr::Kind::Variable, at, {});
      if (auto v = alg_.varIndex(id)) {
        e.index = *v;
      } else if (auto p = alg_.paramIndex(id)) {
        e.kind = Expr::Kind::Parameter;
        e.index = *p;
      } else if (lookup_ && lookup_(id)) {
        e.kind = Expr::Kind::Name;
        e.name = id;
      } else {
        throw ParseError(at, "unknown identifier '" + id + "'");
      }
      return e;
    }
    if (c == ')') throw ParseError(pos_, "unbalanced ')'");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const GAlgebra& alg_;
  const NameLookup& lookup_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parseExpression(std::string_view text, const GAlgebra& alg, const NameLookup& lookup) {
  return Parser(text, alg, lookup).run();
}

Element evaluate(const Expr& e, const AlgebraPtr& alg, const NameLookup& lookup) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return Element::constant(alg, Coeff(e.number));
    case K::Parameter: return Element::constant(alg, Coeff::parameter(e.index, alg->nparams()));
    case K::Variable: return Element::variable(alg, e.index);
    case K::Name: {
      auto v = lookup ? lookup(e.name) : std::nullopt;
      if (!v) throw Error(ErrorCode::UndefinedName, "undefined name '" + e.name + "'");
      return v->inAlgebra(alg);
    }
    case K::Negate: return -evaluate(e.args[0], alg, lookup);
    case K::Sum: return evaluate(e.args[0], alg, lookup) + evaluate(e.args[1], alg, lookup);
    case K::Difference: return evaluate(e.args[0], alg, lookup) - evaluate(e.args[1], alg, lookup);
    case K::Product: return evaluate(e.args[0], alg, lookup) * evaluate(e.args[1], alg, lookup);
    case K::Quotient: {
      Element d = evaluate(e.args[1], alg, lookup);
      if (!d.isConstant() || d.isZero())
        throw Error(ErrorCode::InvalidArgument,
                    "division is only defined by nonzero scalars (position " + std::to_string(e.position) + ")");
      return evaluate(e.args[0], alg, lookup).scaled(Coeff(1) / d.lc());
    }
    case K::Power: return evaluate(e.args[0], alg, lookup).pow(e.exponent);
    case K::Group: return evaluate(e.args[0], alg, lookup);
  }
  throw Error(ErrorCode::Internal, "unknown expression node");
}

Element parseElement(std::string_view text, const AlgebraPtr& alg, const NameLookup& lookup) {
  return evaluate(parseExpression(text, *alg, lookup), alg, lookup);
}

}  // namespace ore
