#include "ore/frontend/format.hpp"

namespace ore {

std::string formatMonomial(const Monomial& m, const GAlgebra& alg) {
  std::string out;
  for (std::size_t v = 0; v < alg.nvars(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += '*';
    out += alg.vars()[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

namespace {

bool negativeLead(const Coeff& c) {
  if (c.isRational()) return c.rational() < 0;
  const auto& num = c.asFunction(c.nparams()).numerator();
  return !num.isZero() && num.leadingCoeff() < 0;
}

std::string termText(const Coeff& c, const std::string& mono, const GAlgebra& alg, bool alone) {
  bool neg = negativeLead(c);
  Coeff mag = neg ? -c : c;
  bool atomic = true;
  std::string coeff = formatCoeff(mag, alg.params(), &atomic);
  std::string body;
  if (mono.empty())
    body = atomic || alone ? coeff : "(" + coeff + ")";
  else if (mag.isOne())
    body = mono;
  else
    body = (atomic ? coeff : "(" + coeff + ")") + "*" + mono;
  return neg ? "-" + body : body;
}

}  // namespace

std::string formatElement(const Element& e) {
  if (e.isZero()) return "0";
  const GAlgebra& alg = *e.algebra();
  std::string out;
  bool alone = e.terms().size() == 1;
  for (const auto& t : e.terms()) {
    std::string s = termText(t.coeff, formatMonomial(t.mono, alg), alg, alone);
    if (!out.empty() && s[0] != '-') out += '+';
    out += s;
  }
  return out;
}

std::string formatVector(const VectorElement& v) {
  std::string out = "(";
  auto comps = v.components();
  for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? ", " : "") + formatElement(comps[i]);
  return out + ")";
}

std::string formatFraction(const Fraction& f) {
  std::string s = "_", r = "_", p = "_", t = "_";
  if (f.left()) {
    s = formatElement(f.left()->s);
    r = formatElement(f.left()->r);
  }
  if (f.right()) {
    p = formatElement(f.right()->p);
    t = formatElement(f.right()->t);
  }
  return "[" + s + ", " + r + ", " + p + ", " + t + "]";
}

std::string formatBasis(const GroebnerBasis& G) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : G.vectors()) {
    out += first ? "" : ", ";
    out += G.rank() == 1 ? formatElement(v.component(0)) : formatVector(v);
    first = false;
  }
  return out + "}";
}

}  // namespace ore
