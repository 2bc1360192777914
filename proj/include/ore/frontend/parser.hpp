#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ore/galgebra.hpp"

namespace ore {

/// Expression tree. Products keep the written operand order.
struct Expr {
  enum class Kind { Number, Parameter, Variable, Name, Negate, Sum, Difference, Product, Quotient, Power, Group };
  Kind kind = Kind::Number;
  Rational number;
  std::size_t index = 0;   // Parameter / Variable
  std::string name;        // Name
  unsigned exponent = 0;   // Power
  std::size_t position = 0;
  std::vector<Expr> args;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : Error(ErrorCode::ParseError, msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Resolves identifiers that are neither variables nor parameters.
using NameLookup = std::function<std::optional<Element>(std::string_view)>;

/// Grammar: ^ binds tighter than unary minus, then * and /, then binary + and -.
/// `/` is division by a nonzero scalar. Throws ParseError.
Expr parseExpression(std::string_view text, const GAlgebra& alg, const NameLookup& lookup = {});
Element evaluate(const Expr& e, const AlgebraPtr& alg, const NameLookup& lookup = {});
/// parseExpression followed by evaluate.
Element parseElement(std::string_view text, const AlgebraPtr& alg, const NameLookup& lookup = {});

}  // namespace ore
