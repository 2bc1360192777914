#include "ore/coeff.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ore {

RationalFunction::RationalFunction(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw std::domain_error("rational function with zero denominator");
  if (num_.isZero()) {
    den_ = ParamPoly::constant(den_.nvars(), Rational(1));
    return;
  }
  ParamPoly g = gcd(num_, den_);
  if (!g.isConstant()) {
    num_ = *num_.dividedBy(g);
    den_ = *den_.dividedBy(g);
  }
  Rational lc = den_.leadingCoeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Coeff::Coeff(RationalFunction f) {
  if (f.denominator().isConstant() && f.numerator().isConstant()) {
    q_ = f.numerator().constantTerm() / f.denominator().constantTerm();
    return;
  }
  f_ = std::make_shared<const RationalFunction>(std::move(f));
}

Coeff Coeff::parameter(std::size_t i, std::size_t nparams) {
  return Coeff(RationalFunction(ParamPoly::variable(nparams, i), ParamPoly::constant(nparams, Rational(1))));
}

std::size_t Coeff::nparams() const { return f_ ? f_->nparams() : 0; }

RationalFunction Coeff::asFunction(std::size_t nparams) const {
  if (f_) return *f_;
  return RationalFunction(ParamPoly::constant(nparams, q_), ParamPoly::constant(nparams, Rational(1)));
}

Coeff Coeff::operator-() const {
  if (!f_) return Coeff(Rational(-q_));
  return Coeff(RationalFunction(-f_->numerator(), f_->denominator()));
}

namespace {

std::size_t commonParams(const Coeff& a, const Coeff& b) { return std::max(a.nparams(), b.nparams()); }

}  // namespace

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.isRational() && b.isRational()) return Coeff(Rational(a.q_ + b.q_));
  std::size_t n = commonParams(a, b);
  RationalFunction fa = a.asFunction(n), fb = b.asFunction(n);
  if (fa.denominator() == fb.denominator())
    return Coeff(RationalFunction(fa.numerator() + fb.numerator(), fa.denominator()));
  return Coeff(RationalFunction(fa.numerator() * fb.denominator() + fb.numerator() * fa.denominator(),
                                fa.denominator() * fb.denominator()));
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.isRational() && b.isRational()) return Coeff(Rational(a.q_ * b.q_));
  if (a.isZero() || b.isZero()) return Coeff();
  std::size_t n = commonParams(a, b);
  if (a.isRational() || b.isRational()) {
    const Coeff& f = a.isRational() ? b : a;
    const Rational& s = a.isRational() ? a.q_ : b.q_;
    return Coeff(RationalFunction(f.f_->numerator().scaled(s), f.f_->denominator()));
  }
  RationalFunction fa = a.asFunction(n), fb = b.asFunction(n);
  return Coeff(RationalFunction(fa.numerator() * fb.numerator(), fa.denominator() * fb.denominator()));
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.isZero()) throw std::domain_error("coefficient division by zero");
  if (a.isRational() && b.isRational()) return Coeff(Rational(a.q_ / b.q_));
  std::size_t n = commonParams(a, b);
  RationalFunction fa = a.asFunction(n), fb = b.asFunction(n);
  return Coeff(RationalFunction(fa.numerator() * fb.denominator(), fa.denominator() * fb.numerator()));
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.isRational() != b.isRational()) return false;
  if (a.isRational()) return a.q_ == b.q_;
  return *a.f_ == *b.f_;
}

Coeff Coeff::pow(unsigned e) const {
  Coeff r(1), base = *this;
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

std::size_t Coeff::hash() const {
  if (!f_) return std::hash<std::string>{}(q_.get_str());
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto* p : {&f_->numerator(), &f_->denominator()})
    for (const auto& [e, c] : p->terms()) {
      for (auto x : e) h = h * 31 + x;
      h ^= std::hash<std::string>{}(c.get_str()) + (h << 6U) + (h >> 2U);
    }
  return h;
}

namespace {

std::string rationalText(const Rational& q) { return q.get_str(); }

std::string monomialText(const ParamPoly::Exps& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "p" + std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string formatParamPoly(const ParamPoly& p, std::span<const std::string> params) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = monomialText(e, params);
    Rational mag = abs(c);
    bool neg = c < 0;
    if (neg)
      out += '-';
    else if (!first)
      out += '+';
    if (mono.empty())
      out += rationalText(mag);
    else if (mag == 1)
      out += mono;
    else
      out += rationalText(mag) + "*" + mono;
    first = false;
  }
  return out;
}

std::string formatCoeff(const Coeff& c, std::span<const std::string> params, bool* atomic) {
  if (c.isRational()) {
    if (atomic) *atomic = true;
    return rationalText(c.rational());
  }
  RationalFunction f = c.asFunction(c.nparams());
  const ParamPoly& num = f.numerator();
  const ParamPoly& den = f.denominator();
  bool numSingle = num.terms().size() == 1;
  std::string n = formatParamPoly(num, params);
  if (den.isConstant()) {
    if (atomic) *atomic = numSingle;
    return n;
  }
  if (atomic) *atomic = false;
  std::string d = formatParamPoly(den, params);
  if (!numSingle) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace ore
