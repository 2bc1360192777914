#include "ore/commutative.hpp"

#include <set>

namespace ore {

void requireCommutingSupport(std::initializer_list<const Element*> elems) {
  std::set<std::size_t> vars;
  AlgebraPtr alg;
  for (const Element* e : elems) {
    if (!e->algebra()) continue;
    if (alg && alg != e->algebra()) throw Error(ErrorCode::PresentationMismatch, "operands live in different presentations");
    alg = e->algebra();
    for (auto v : e->support()) vars.insert(v);
  }
  if (!alg) return;
  std::vector<std::size_t> block(vars.begin(), vars.end());
  if (!alg->isCommutativeBlock(block))
    throw Error(ErrorCode::NonCommuting, "operation requires pairwise commuting variables");
}

CommPoly toCommutative(const Element& f) {
  const std::size_t n = f.algebra()->nvars();
  std::vector<CommPoly::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    CommPoly::Exps e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = t.mono[v];
    terms.push_back({std::move(e), t.coeff});
  }
  return CommPoly::fromTerms(n, std::move(terms));
}

Element fromCommutative(const AlgebraPtr& alg, const CommPoly& p) {
  TermList terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < e.size(); ++v) m[v] = static_cast<std::uint16_t>(e[v]);
    terms.push_back({c, m});
  }
  return Element(alg, std::move(terms));
}

Element commGcd(const Element& f, const Element& g) {
  requireCommutingSupport({&f, &g});
  const AlgebraPtr& alg = f.algebra() ? f.algebra() : g.algebra();
  if (f.isZero() && g.isZero()) return Element(alg);
  return fromCommutative(alg, gcd(toCommutative(f), toCommutative(g))).monic();
}

Element squarefreePart(const Element& f) {
  if (f.isZero()) throw Error(ErrorCode::InvalidArgument, "square-free part of zero");
  requireCommutingSupport({&f});
  CommPoly p = toCommutative(f);
  CommPoly g = p;
  for (auto v : f.support()) g = gcd(g, p.derivative(v));
  auto q = p.dividedBy(g);
  if (!q) throw Error(ErrorCode::Internal, "square-free division failed");
  return fromCommutative(f.algebra(), *q).monic();
}

std::optional<Element> commDivide(const Element& f, const Element& g) {
  requireCommutingSupport({&f, &g});
  if (g.isZero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  auto q = toCommutative(f).dividedBy(toCommutative(g));
  if (!q) return std::nullopt;
  return fromCommutative(g.algebra(), *q);
}

}  // namespace ore
