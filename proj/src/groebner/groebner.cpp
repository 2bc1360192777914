#include "ore/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ore {

// ---------------------------------------------------------------------------
// VectorElement

VectorElement::VectorElement(AlgebraPtr alg, std::size_t rank, std::vector<VecTerm> terms, PositionStrategy pos)
    : alg_(std::move(alg)), rank_(rank), pos_(pos) {
  std::sort(terms.begin(), terms.end(),
            [&](const VecTerm& a, const VecTerm& b) { return compare(a.comp, a.mono, b.comp, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.comp >= rank_) throw Error(ErrorCode::InvalidArgument, "component index out of range");
    if (!terms_.empty() && terms_.back().comp == t.comp && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.isZero()) terms_.pop_back();
    } else if (!t.coeff.isZero()) {
      terms_.push_back(std::move(t));
    }
  }
}

VectorElement VectorElement::fromComponents(const AlgebraPtr& alg, std::span<const Element> comps,
                                            PositionStrategy pos) {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].isZero() && comps[i].algebra() != alg)
      throw Error(ErrorCode::PresentationMismatch, "component lives in another presentation");
    for (const auto& t : comps[i].terms()) terms.push_back({t.coeff, i, t.mono});
  }
  return VectorElement(alg, comps.size(), std::move(terms), pos);
}

VectorElement VectorElement::tail() const {
  VectorElement r(alg_, rank_, pos_);
  r.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
  return r;
}

Element VectorElement::component(std::size_t i) const {
  TermList out;
  for (const auto& t : terms_)
    if (t.comp == i) out.push_back({t.coeff, t.mono});
  return Element(alg_, std::move(out));
}

std::vector<Element> VectorElement::components() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < rank_; ++i) out.push_back(component(i));
  return out;
}

bool VectorElement::zeroBelow(std::size_t k) const {
  for (const auto& t : terms_)
    if (t.comp < k) return false;
  return true;
}

int VectorElement::compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const {
  if (pos_ == PositionStrategy::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return alg_->order().compare(a, b);
  }
  if (int c = alg_->order().compare(a, b)) return c;
  return ca == cb ? 0 : (ca < cb ? 1 : -1);
}

VectorElement VectorElement::scaled(const Coeff& c) const {
  VectorElement r(alg_, rank_, pos_);
  if (c.isZero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

VectorElement VectorElement::monic() const {
  if (isZero() || leadingTerm().coeff.isOne()) return *this;
  return scaled(Coeff(1) / leadingTerm().coeff);
}

VectorElement VectorElement::leftMultiply(const Coeff& c, const Monomial& m) const {
  if (m.isOne()) return scaled(c);
  std::vector<detail::Accumulator> acc(rank_);
  const auto& table = alg_->table();
  for (const auto& t : terms_) table.multiplyInto(m, t.mono, c * t.coeff, acc[t.comp]);
  std::vector<VecTerm> out;
  for (std::size_t i = 0; i < rank_; ++i)
    for (auto& [mono, coeff] : acc[i])
      if (!coeff.isZero()) out.push_back({std::move(coeff), i, mono});
  return VectorElement(alg_, rank_, std::move(out), pos_);
}

VectorElement VectorElement::leftMultiply(const Element& f) const {
  VectorElement r(alg_, rank_, pos_);
  for (const auto& t : f.terms()) r = r + leftMultiply(t.coeff, t.mono);
  return r;
}

namespace {

VectorElement mergeVec(const VectorElement& a, const VectorElement& b, bool negate) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::InvalidArgument, "module ranks differ");
  std::vector<VecTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin(), j = b.terms().begin();
  const auto ie = a.terms().end(), je = b.terms().end();
  while (i != ie || j != je) {
    int c = i == ie ? -1 : j == je ? 1 : a.compare(i->comp, i->mono, j->comp, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({negate ? -j->coeff : j->coeff, j->comp, j->mono});
      ++j;
    } else {
      Coeff s = negate ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.isZero()) out.push_back({std::move(s), i->comp, i->mono});
      ++i;
      ++j;
    }
  }
  const AlgebraPtr& alg = a.algebra() ? a.algebra() : b.algebra();
  return VectorElement(alg, a.rank(), std::move(out), a.position());
}

}  // namespace

VectorElement operator+(const VectorElement& a, const VectorElement& b) { return mergeVec(a, b, false); }
VectorElement operator-(const VectorElement& a, const VectorElement& b) { return mergeVec(a, b, true); }

// ---------------------------------------------------------------------------
// Buchberger

std::vector<Element> GroebnerBasis::elements() const {
  std::vector<Element> out;
  for (const auto& g : gens_) out.push_back(g.component(0));
  return out;
}

bool GroebnerBasis::isUnit() const {
  return rank_ == 1 && std::any_of(gens_.begin(), gens_.end(), [](const VectorElement& g) {
           return g.leadingTerm().mono.isOne();
         });
}

namespace {

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

/// Full left normal form: the largest reducible term is reduced first, by the
/// divisor of smallest index.
VectorElement reduceFull(VectorElement f, const std::vector<VectorElement>& G, std::size_t skip = kNoSkip) {
  std::vector<VecTerm> rem;
  const AlgebraPtr alg = f.algebra();
  const std::size_t rank = f.rank();
  const PositionStrategy pos = f.position();
  while (!f.isZero()) {
    const VecTerm lt = f.leadingTerm();
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == skip) continue;
      const VecTerm& g = G[k].leadingTerm();
      if (g.comp != lt.comp || !g.mono.divides(lt.mono)) continue;
      VectorElement h = G[k].leftMultiply(Coeff(1), lt.mono - g.mono);
      f = f - h.scaled(lt.coeff / h.leadingTerm().coeff);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      f = f.tail();
    }
  }
  return VectorElement(alg, rank, std::move(rem), pos);
}

VectorElement sPolynomial(const VectorElement& f, const VectorElement& g) {
  Monomial L = lcm(f.leadingTerm().mono, g.leadingTerm().mono);
  VectorElement a = f.leftMultiply(Coeff(1), L - f.leadingTerm().mono);
  VectorElement b = g.leftMultiply(Coeff(1), L - g.leadingTerm().mono);
  return a.scaled(Coeff(1) / a.leadingTerm().coeff) - b.scaled(Coeff(1) / b.leadingTerm().coeff);
}

struct Pair {
  std::size_t i, j;
  std::size_t comp;
  Monomial lcm;
};

/// Buchberger's algorithm with the chain criterion. With dropBelow > 0, new
/// elements vanishing in all components below it are discarded (used when
/// only the leading components matter, e.g. for lifting).
std::vector<VectorElement> buchberger(const std::vector<VectorElement>& input, std::size_t dropBelow) {
  std::vector<VectorElement> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto insert = [&](VectorElement h) {
    h = h.monic();
    std::size_t idx = G.size();
    const VecTerm& lh = h.leadingTerm();
    for (std::size_t i = 0; i < idx; ++i) {
      const VecTerm& lg = G[i].leadingTerm();
      if (lg.comp != lh.comp) continue;
      pairs.push_back({i, idx, lh.comp, lcm(lg.mono, lh.mono)});
      pending.insert({i, idx});
    }
    G.push_back(std::move(h));
  };
  auto keep = [&](const VectorElement& h) { return !h.isZero() && !(dropBelow > 0 && h.zeroBelow(dropBelow)); };

  for (const auto& f : input) {
    VectorElement h = reduceFull(f, G);
    if (keep(h)) insert(std::move(h));
  }

  while (!pairs.empty()) {
    const VectorElement& ref = G.front();
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      int c = ref.compare(it->comp, it->lcm, best->comp, best->lcm);
      if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == p.i || k == p.j) continue;
      const VecTerm& lk = G[k].leadingTerm();
      if (lk.comp != p.comp || !lk.mono.divides(p.lcm)) continue;
      if (pending.count({std::min(p.i, k), std::max(p.i, k)})) continue;
      if (pending.count({std::min(p.j, k), std::max(p.j, k)})) continue;
      redundant = true;
    }
    if (redundant) continue;

    VectorElement h = reduceFull(sPolynomial(G[p.i], G[p.j]), G);
    if (keep(h)) insert(std::move(h));
  }
  return G;
}

std::vector<VectorElement> reduceBasis(std::vector<VectorElement> G) {
  std::vector<VectorElement> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const VecTerm& li = G[i].leadingTerm();
    bool dropped = false;
    for (std::size_t j = 0; j < G.size() && !dropped; ++j) {
      if (j == i) continue;
      const VecTerm& lj = G[j].leadingTerm();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      dropped = !(lj.mono == li.mono) || j < i;
    }
    if (!dropped) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = reduceFull(minimal[i], minimal, i).monic();
  std::sort(minimal.begin(), minimal.end(), [](const VectorElement& a, const VectorElement& b) {
    const VecTerm &x = a.leadingTerm(), &y = b.leadingTerm();
    return a.compare(x.comp, x.mono, y.comp, y.mono) < 0;
  });
  return minimal;
}

void requireAlgebra(const AlgebraPtr& expected, const AlgebraPtr& actual) {
  if (actual && actual != expected) throw Error(ErrorCode::PresentationMismatch, "operands live in different presentations");
}

std::vector<VectorElement> asRankOne(const std::vector<Element>& gens, const AlgebraPtr& alg) {
  std::vector<VectorElement> out;
  for (const auto& g : gens) {
    requireAlgebra(alg, g.algebra());
    out.push_back(VectorElement::fromComponents(alg, std::span<const Element>(&g, 1)));
  }
  return out;
}

const AlgebraPtr& firstAlgebra(const std::vector<Element>& gens) {
  for (const auto& g : gens)
    if (g.algebra()) return g.algebra();
  throw Error(ErrorCode::InvalidArgument, "cannot infer the presentation of an empty generator list");
}

/// Generators (g_i, e_{i+1}) of the graph module used for syzygies and lifts.
std::vector<VectorElement> tagged(const std::vector<Element>& gens, const AlgebraPtr& alg) {
  const std::size_t k = gens.size();
  std::vector<VectorElement> out;
  for (std::size_t i = 0; i < k; ++i) {
    requireAlgebra(alg, gens[i].algebra());
    std::vector<VecTerm> terms;
    for (const auto& t : gens[i].terms()) terms.push_back({t.coeff, 0, t.mono});
    terms.push_back({Coeff(1), i + 1, Monomial{}});
    out.emplace_back(alg, k + 1, std::move(terms));
  }
  return out;
}

}  // namespace

GroebnerBasis leftGB(const std::vector<VectorElement>& gens, const AlgebraPtr& alg, std::size_t rank,
                     PositionStrategy pos) {
  std::vector<VectorElement> input;
  for (const auto& g : gens) {
    requireAlgebra(alg, g.algebra());
    if (g.rank() != rank) throw Error(ErrorCode::InvalidArgument, "module ranks differ");
    input.push_back(g.position() == pos ? g : VectorElement(alg, rank, g.terms(), pos));
  }
  GroebnerBasis G(alg, rank, pos, reduceBasis(buchberger(input, 0)), true);
  G.setOriginal(gens);
  return G;
}

GroebnerBasis leftGB(const std::vector<Element>& gens, const AlgebraPtr& alg) {
  return leftGB(asRankOne(gens, alg), alg, 1);
}

GroebnerBasis leftGB(const std::vector<Element>& gens) { return leftGB(gens, firstAlgebra(gens)); }

VectorElement leftNF(const VectorElement& f, const GroebnerBasis& G) {
  requireAlgebra(G.algebra(), f.algebra());
  if (f.rank() != G.rank()) throw Error(ErrorCode::InvalidArgument, "module ranks differ");
  if (f.isZero()) return VectorElement(G.algebra(), G.rank(), G.position());
  VectorElement g = f.position() == G.position() ? f : VectorElement(f.algebra(), f.rank(), f.terms(), G.position());
  return reduceFull(g, G.vectors());
}

Element leftNF(const Element& f, const GroebnerBasis& G) {
  if (G.rank() != 1) throw Error(ErrorCode::InvalidArgument, "ideal normal form needs a rank-one basis");
  requireAlgebra(G.algebra(), f.algebra());
  if (f.isZero()) return Element(G.algebra());
  return leftNF(VectorElement::fromComponents(G.algebra(), std::span<const Element>(&f, 1), G.position()), G)
      .component(0);
}

bool inLeftIdeal(const Element& f, const GroebnerBasis& G) { return leftNF(f, G).isZero(); }

bool satisfiesBuchbergerCriterion(const GroebnerBasis& G) {
  const auto& v = G.vectors();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i].leadingTerm().comp != v[j].leadingTerm().comp) continue;
      if (!reduceFull(sPolynomial(v[i], v[j]), v).isZero()) return false;
    }
  return true;
}

GroebnerBasis eliminate(const std::vector<Element>& gens, std::span<const std::size_t> elimVars) {
  const AlgebraPtr& alg = firstAlgebra(gens);
  if (elimVars.empty()) return leftGB(gens, alg);
  MonomialOrder order = MonomialOrder::elimination(alg->nvars(), elimVars);
  auto sibling = alg->withOrder(order);
  if (!sibling)
    throw Error(ErrorCode::NotEliminable, "no admissible elimination order for the requested block");
  std::vector<Element> moved;
  for (const auto& g : gens) moved.push_back(g.inAlgebra(*sibling));
  GroebnerBasis G = leftGB(moved, *sibling);
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < alg->nvars(); ++v)
    if (std::find(elimVars.begin(), elimVars.end(), v) == elimVars.end()) kept.push_back(v);
  std::vector<Element> inter;
  for (const auto& g : G.elements())
    if (g.involvesOnly(kept)) inter.push_back(g.inAlgebra(alg));
  return leftGB(inter, alg);
}

GroebnerBasis leftSyzygies(const std::vector<Element>& f) {
  const AlgebraPtr& alg = firstAlgebra(f);
  const std::size_t k = f.size();
  auto G = reduceBasis(buchberger(tagged(f, alg), 0));
  std::vector<VectorElement> syz;
  for (const auto& g : G) {
    if (!g.zeroBelow(1)) continue;
    std::vector<VecTerm> terms;
    for (const auto& t : g.terms()) terms.push_back({t.coeff, t.comp - 1, t.mono});
    syz.emplace_back(alg, k, std::move(terms));
  }
  return GroebnerBasis(alg, k, PositionStrategy::PositionOverTerm, std::move(syz), true);
}

std::vector<VectorElement> rightSyzygies(const std::vector<Element>& f) {
  const AlgebraPtr& alg = firstAlgebra(f);
  std::vector<Element> op;
  for (const auto& g : f) {
    requireAlgebra(alg, g.algebra());
    op.push_back(g.isZero() ? Element(alg->opposite()) : toOpposite(g));
  }
  GroebnerBasis S = leftSyzygies(op);
  std::vector<VectorElement> out;
  for (const auto& v : S.vectors()) {
    std::vector<Element> comps;
    for (const auto& c : v.components()) comps.push_back(c.isZero() ? Element(alg) : toOpposite(c));
    out.push_back(VectorElement::fromComponents(alg, comps));
  }
  return out;
}

GroebnerBasis kernelPhi(const Element& s, const Element& r) {
  if (s.isZero()) throw Error(ErrorCode::InvalidArgument, "kernelPhi needs a nonzero s");
  const AlgebraPtr& alg = s.algebra();
  requireAlgebra(alg, r.algebra());
  if (r.isZero()) return leftGB({Element::constant(alg, 1)}, alg);
  GroebnerBasis S = leftSyzygies({r, s});
  std::vector<Element> firsts;
  for (const auto& v : S.vectors()) firsts.push_back(v.component(0));
  return leftGB(firsts, alg);
}

Element rightDivideExact(const Element& f, const Element& s) {
  if (s.isZero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const AlgebraPtr& alg = s.algebra();
  requireAlgebra(alg, f.algebra());
  // {s} is a left Gröbner basis of R s, so plain division decides membership.
  TermList quotient;
  Element rem = f.isZero() ? Element(alg) : f;
  const Monomial& ls = s.lm();
  while (!rem.isZero()) {
    const Term lt = rem.leadingTerm();
    if (!ls.divides(lt.mono)) throw Error(ErrorCode::NotDivisible, "element is not a left multiple of the divisor");
    Monomial delta = lt.mono - ls;
    Element h = multiplyLeft(Coeff(1), delta, s);
    Coeff c = lt.coeff / h.lc();
    quotient.push_back({c, delta});
    rem = rem - h.scaled(c);
  }
  return Element(alg, std::move(quotient));
}

std::optional<std::vector<Element>> liftCoefficients(const Element& f, const std::vector<Element>& gens) {
  const AlgebraPtr& alg = firstAlgebra(gens);
  requireAlgebra(alg, f.algebra());
  const std::size_t k = gens.size();
  auto G = buchberger(tagged(gens, alg), 1);
  std::vector<VecTerm> terms;
  for (const auto& t : f.terms()) terms.push_back({t.coeff, 0, t.mono});
  VectorElement nf = reduceFull(VectorElement(alg, k + 1, std::move(terms)), G);
  if (!nf.zeroBelow(1)) return std::nullopt;
  std::vector<Element> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(-nf.component(i + 1));
  return out;
}

Element liftWitness(const Element& b, const Element& r) {
  if (r.isZero()) throw Error(ErrorCode::InvalidArgument, "lift against zero");
  auto co = liftCoefficients(b, {r});
  if (!co) throw Error(ErrorCode::NotDivisible, "element is not in the left ideal generated by r");
  return co->front();
}

}  // namespace ore
