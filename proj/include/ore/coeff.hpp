#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>

#include "ore/sparse_poly.hpp"

namespace ore {

using Rational = mpq_class;
using ParamPoly = SparsePoly<Rational>;

/// Element of Q(p_1, ..., p_k): a reduced quotient of commutative polynomials.
/// The denominator is monic in lex order over the fixed parameter order.
class RationalFunction {
 public:
  RationalFunction(ParamPoly num, ParamPoly den);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }
  std::size_t nparams() const { return num_.nvars(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ParamPoly num_, den_;
};

/// Exact coefficient: a rational number, or a rational function in the
/// parameters of the ambient algebra. Values that reduce to a constant are
/// always stored in rational form, so equality is structural.
class Coeff {
 public:
  Coeff() = default;
  Coeff(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational q) : q_(std::move(q)) { q_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  explicit Coeff(RationalFunction f);

  /// The i-th of `nparams` parameters.
  static Coeff parameter(std::size_t i, std::size_t nparams);

  bool isZero() const { return !f_ && q_ == 0; }
  bool isOne() const { return !f_ && q_ == 1; }
  bool isRational() const { return !f_; }
  const Rational& rational() const { return q_; }
  /// Rational-function view; constants are lifted with `nparams` parameters.
  RationalFunction asFunction(std::size_t nparams) const;
  std::size_t nparams() const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator-=(const Coeff& b) { return *this = *this - b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }
  friend bool operator==(const Coeff& a, const Coeff& b);

  Coeff pow(unsigned e) const;
  std::size_t hash() const;

 private:
  Rational q_{0};
  std::shared_ptr<const RationalFunction> f_;
};

/// Renders a parameter polynomial, e.g. "q^2+1".
std::string formatParamPoly(const ParamPoly& p, std::span<const std::string> params);

/// Renders a coefficient. `atomic` is set when the text can be juxtaposed with
/// "*" without parentheses (a single signed product).
std::string formatCoeff(const Coeff& c, std::span<const std::string> params, bool* atomic = nullptr);

}  // namespace ore
