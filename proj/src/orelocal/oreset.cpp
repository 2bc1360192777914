#include "ore/oreset.hpp"

#include <algorithm>

#include "ore/commutative.hpp"

namespace ore {

std::string_view oreKindName(OreKind kind) {
  switch (kind) {
    case OreKind::Monoidal: return "monoidal";
    case OreKind::Geometric: return "geometric";
    case OreKind::Rational: return "rational";
  }
  return "?";
}

std::string_view emptinessName(Emptiness e) {
  switch (e) {
    case Emptiness::NonEmpty: return "NonEmpty";
    case Emptiness::Empty: return "Empty";
    case Emptiness::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view oreStatusName(OreStatus s) {
  switch (s) {
    case OreStatus::Satisfied: return "Satisfied";
    case OreStatus::Violated: return "Violated";
    case OreStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

void requireAmbient(const AlgebraPtr& alg, const Element& e) {
  if (e.algebra() && e.algebra() != alg)
    throw Error(ErrorCode::PresentationMismatch, "element does not live in the Ore set's presentation");
}

Element oppositeOrZero(const Element& e, const AlgebraPtr& op) { return e.isZero() ? Element(op) : toOpposite(e); }

}  // namespace

OreSetPtr OreSet::monoidal(const AlgebraPtr& alg, std::vector<Element> gens, unsigned bound) {
  if (gens.empty()) throw Error(ErrorCode::InvalidOreSet, "monoidal set needs at least one generator");
  std::vector<std::size_t> block;
  for (const auto& g : gens) {
    requireAmbient(alg, g);
    if (g.isConstant()) throw Error(ErrorCode::InvalidOreSet, "monoidal generators must be nonzero non-units");
    for (auto v : g.support()) block.push_back(v);
  }
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  if (!alg->isCommutativeBlock(block))
    throw Error(ErrorCode::InvalidOreSet, "monoidal generators must lie in one commuting block");
  std::shared_ptr<OreSet> S(new OreSet());
  S->kind_ = OreKind::Monoidal;
  S->alg_ = alg;
  S->block_ = std::move(block);
  S->h_ = Element::constant(alg, 1);
  for (const auto& g : gens) S->h_ = S->h_ * g;
  S->g_ = squarefreePart(S->h_);
  S->gens_ = std::move(gens);
  S->bound_ = bound;
  return S;
}

OreSetPtr OreSet::geometric(const AlgebraPtr& alg, std::vector<Element> prime,
                            std::optional<std::vector<std::size_t>> block, bool unverified) {
  if (!unverified && !alg->isWeylType())
    throw Error(ErrorCode::InvalidOreSet,
                "geometric localization is only supported in Weyl-type presentations (K[x] minus <x+1> is not "
                "a left Ore set in the shift algebra)");
  std::vector<std::size_t> b;
  if (alg->isWeylType() && !unverified) {
    b = alg->xBlock();
    if (block) {
      auto given = *block;
      std::sort(given.begin(), given.end());
      if (given != b) throw Error(ErrorCode::InvalidOreSet, "geometric block must be the x-block");
    }
  } else if (block) {
    b = *block;
  } else {
    for (const auto& p : prime)
      for (auto v : p.support()) b.push_back(v);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  for (auto v : b)
    if (v >= alg->nvars()) throw Error(ErrorCode::InvalidOreSet, "block variable out of range");
  if (!alg->isCommutativeBlock(b)) throw Error(ErrorCode::InvalidOreSet, "geometric block must commute");
  for (const auto& p : prime) {
    requireAmbient(alg, p);
    if (!p.involvesOnly(b)) throw Error(ErrorCode::InvalidOreSet, "prime ideal generators must lie in the x-block");
  }
  std::shared_ptr<OreSet> S(new OreSet());
  S->kind_ = OreKind::Geometric;
  S->alg_ = alg;
  S->block_ = std::move(b);
  S->primeGB_ = prime.empty() ? GroebnerBasis(alg, 1, PositionStrategy::PositionOverTerm, {}, true) : leftGB(prime, alg);
  if (S->primeGB_.isUnit()) throw Error(ErrorCode::InvalidOreSet, "the ideal contains 1");
  S->gens_ = std::move(prime);
  S->verified_ = !unverified;
  return S;
}

OreSetPtr OreSet::rational(const AlgebraPtr& alg, std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (auto v : vars)
    if (v >= alg->nvars()) throw Error(ErrorCode::InvalidOreSet, "variable index out of range");
  if (!alg->isClosedBlock(vars))
    throw Error(ErrorCode::InvalidOreSet, "the chosen variables do not generate a subalgebra");
  std::shared_ptr<OreSet> S(new OreSet());
  S->kind_ = OreKind::Rational;
  S->alg_ = alg;
  S->block_ = std::move(vars);
  return S;
}

std::vector<std::size_t> OreSet::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < alg_->nvars(); ++v)
    if (!std::binary_search(block_.begin(), block_.end(), v)) out.push_back(v);
  return out;
}

OreSetPtr OreSet::mirrored() const {
  std::lock_guard lock(mirrorMutex_);
  if (auto back = mirrorBack_.lock()) return back;
  if (mirror_) return mirror_;
  AlgebraPtr op = alg_->opposite();
  std::shared_ptr<OreSet> M(new OreSet());
  M->kind_ = kind_;
  M->alg_ = op;
  for (const auto& g : gens_) M->gens_.push_back(oppositeOrZero(g, op));
  for (auto v : block_) M->block_.push_back(alg_->oppositeIndex(v));
  std::sort(M->block_.begin(), M->block_.end());
  if (kind_ == OreKind::Monoidal) {
    M->g_ = toOpposite(g_);
    M->h_ = toOpposite(h_);
  }
  if (kind_ == OreKind::Geometric)
    M->primeGB_ = M->gens_.empty() ? GroebnerBasis(op, 1, PositionStrategy::PositionOverTerm, {}, true)
                                   : leftGB(M->gens_, op);
  M->bound_ = bound_;
  M->verified_ = verified_;
  M->mirrorBack_ = shared_from_this();
  mirror_ = M;
  return mirror_;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool isGeneratorProduct(const Element& p, const std::vector<Element>& gens) {
  if (p.isConstant()) return !p.isZero();
  for (const auto& g : gens) {
    if (g.totalDegree() > p.totalDegree()) continue;
    auto q = commDivide(p, g);
    if (q && isGeneratorProduct(*q, gens)) return true;
  }
  return false;
}

}  // namespace

bool isInS(const Element& p, const OreSet& S) {
  if (p.isZero()) return false;
  requireAmbient(S.algebra(), p);
  switch (S.kind()) {
    case OreKind::Monoidal:
      return p.involvesOnly(S.block()) && isGeneratorProduct(p, S.generators());
    case OreKind::Geometric:
      return p.involvesOnly(S.block()) && !inLeftIdeal(p, S.primeBasis());
    case OreKind::Rational:
      return p.involvesOnly(S.block());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Intersections

unsigned monoidalIntersection(const GroebnerBasis& G, const Element& g, unsigned bound) {
  if (G.isZero()) throw Error(ErrorCode::IntersectionEmpty, "the zero ideal meets no power of g");
  const Monomial lead = g.lm();
  std::optional<unsigned> start;
  Monomial mono;
  for (unsigned m = 0; m <= bound; ++m) {
    bool hit = std::any_of(G.vectors().begin(), G.vectors().end(),
                           [&](const VectorElement& v) { return v.leadingTerm().mono.divides(mono); });
    if (hit) {
      start = m;
      break;
    }
    mono = mono + lead;
  }
  if (!start) throw Error(ErrorCode::BoundExceeded, "no power of g up to the bound has a reducible leading monomial");
  Element power = g.pow(*start);
  for (unsigned m = *start; m <= bound; ++m) {
    if (inLeftIdeal(power, G)) return m;
    power = power * g;
  }
  throw Error(ErrorCode::BoundExceeded,
              "no power g^m with m <= " + std::to_string(bound) + " lies in the ideal");
}

EmptinessCertificate monoidalEmptinessCertificate(const std::vector<Element>& I, const OreSet& S) {
  EmptinessCertificate cert;
  if (S.kind() != OreKind::Monoidal) throw Error(ErrorCode::InvalidArgument, "monoidal Ore set expected");
  GroebnerBasis Ic;
  try {
    Ic = eliminate(I, S.complement());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEliminable) throw;
    return cert;
  }
  cert.contracted = Ic;
  if (Ic.isUnit()) {
    cert.status = Emptiness::NonEmpty;
    return cert;
  }
  if (Ic.isZero()) {
    cert.status = Emptiness::Empty;
    return cert;
  }
  // g ∈ sqrt(Ic) iff 1 ∈ Ic + <1 - t g> in K[block, t].
  const AlgebraPtr& alg = S.algebra();
  const auto& block = S.block();
  GAlgebraSpec spec;
  for (auto v : block) spec.vars.push_back(alg->vars()[v]);
  std::string fresh = "t";
  while (std::find(spec.vars.begin(), spec.vars.end(), fresh) != spec.vars.end()) fresh += "_";
  spec.vars.push_back(fresh);
  spec.params = alg->params();
  AlgebraPtr K = GAlgebra::create(spec);
  auto transfer = [&](const Element& e) {
    TermList terms;
    for (const auto& t : e.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < block.size(); ++i) m[i] = t.mono[block[i]];
      terms.push_back({t.coeff, m});
    }
    return Element(K, std::move(terms));
  };
  std::vector<Element> gens;
  for (const auto& e : Ic.elements()) gens.push_back(transfer(e));
  Element t = Element::variable(K, block.size());
  gens.push_back(Element::constant(K, 1) - t * transfer(S.radicalGenerator()));
  cert.status = leftGB(gens, K).isUnit() ? Emptiness::NonEmpty : Emptiness::Empty;
  return cert;
}

GeometricIntersection geometricIntersection(const std::vector<Element>& I, const OreSet& S) {
  if (S.kind() != OreKind::Geometric) throw Error(ErrorCode::InvalidArgument, "geometric Ore set expected");
  GeometricIntersection out;
  out.contracted = eliminate(I, S.complement());
  out.m = out.contracted.elements();
  const auto& order = S.algebra()->order();
  for (std::size_t i = 0; i < out.m.size(); ++i) {
    out.residues.push_back(leftNF(out.m[i], S.primeBasis()));
    if (out.residues.back().isZero()) continue;
    out.empty = false;
    if (!out.representative) {
      out.representative = i;
      continue;
    }
    const Element& best = out.m[*out.representative];
    int c = order.compare(out.m[i].lm(), best.lm());
    if (c < 0 || (c == 0 && out.m[i].terms().size() < best.terms().size())) out.representative = i;
  }
  return out;
}

GroebnerBasis rationalIntersection(const std::vector<Element>& I, const OreSet& S) {
  if (S.kind() != OreKind::Rational) throw Error(ErrorCode::InvalidArgument, "rational Ore set expected");
  return eliminate(I, S.complement());
}

// ---------------------------------------------------------------------------
// Ore conditions

namespace {

std::vector<Element> nonzero(const GroebnerBasis& G) { return G.elements(); }

/// Selects s~ from J ∩ S; nullopt when the intersection is provably empty.
std::optional<OreWitness> selectWitness(const Element& s, const Element& r, const OreSet& S, const GroebnerBasis& J) {
  OreWitness w;
  w.candidates = J;
  if (J.isZero()) return std::nullopt;
  switch (S.kind()) {
    case OreKind::Monoidal: {
      unsigned m = 0;
      try {
        m = monoidalIntersection(J, S.radicalGenerator(), S.bound());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundExceeded) throw;
        if (monoidalEmptinessCertificate(nonzero(J), S).status == Emptiness::Empty) return std::nullopt;
        throw;
      }
      Element pw = S.radicalGenerator().pow(m);
      // g^m need not be a product of generators; the matching power of their
      // product is, and is a left multiple of g^m.
      if (!isInS(pw, S)) pw = S.product().pow(m);
      w.sTilde = pw;
      w.exponent = m;
      break;
    }
    case OreKind::Geometric: {
      auto gi = geometricIntersection(nonzero(J), S);
      if (gi.empty) return std::nullopt;
      w.sTilde = gi.m[*gi.representative];
      break;
    }
    case OreKind::Rational: {
      auto B = rationalIntersection(nonzero(J), S);
      if (B.isZero()) return std::nullopt;
      w.sTilde = B.elements().front();
      break;
    }
  }
  w.rTilde = rightDivideExact(w.sTilde * r, s);
  return w;
}

void requireDenominator(const Element& s, const OreSet& S) {
  requireAmbient(S.algebra(), s);
  if (!isInS(s, S)) throw Error(ErrorCode::InvalidArgument, "the denominator is not an element of S");
}

}  // namespace

OreWitness leftOre(const Element& s, const Element& r, const OreSet& S) {
  requireDenominator(s, S);
  requireAmbient(S.algebra(), r);
  const AlgebraPtr& alg = S.algebra();
  Element rr = r.isZero() ? Element(alg) : r;
  GroebnerBasis J = kernelPhi(s, rr);
  auto w = selectWitness(s, rr, S, J);
  if (!w)
    throw Error(ErrorCode::IntersectionEmpty, "ker(phi) does not meet S: S is not a left Ore set for this pair");
  return *w;
}

OreWitness rightOre(const Element& s, const Element& r, const OreSet& S) {
  requireDenominator(s, S);
  requireAmbient(S.algebra(), r);
  OreSetPtr M = S.mirrored();
  const AlgebraPtr& op = M->algebra();
  OreWitness w;
  try {
    w = leftOre(toOpposite(s), oppositeOrZero(r, op), *M);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IntersectionEmpty)
      throw Error(ErrorCode::RightOreFailure, std::string("right Ore condition fails: ") + e.what());
    throw;
  }
  w.sTilde = toOpposite(w.sTilde);
  w.rTilde = oppositeOrZero(w.rTilde, S.algebra());
  return w;
}

OreRefutation disproveOrePair(const Element& s, const Element& r, const OreSet& S) {
  requireDenominator(s, S);
  requireAmbient(S.algebra(), r);
  OreRefutation out;
  Element rr = r.isZero() ? Element(S.algebra()) : r;
  out.kernel = kernelPhi(s, rr);
  try {
    switch (S.kind()) {
      case OreKind::Geometric: {
        auto gi = geometricIntersection(nonzero(out.kernel), S);
        if (gi.empty) {
          out.status = OreStatus::Violated;
          out.certificate = gi.contracted;
          return out;
        }
        break;
      }
      case OreKind::Rational: {
        auto B = rationalIntersection(nonzero(out.kernel), S);
        if (B.isZero()) {
          out.status = OreStatus::Violated;
          out.certificate = B;
          return out;
        }
        break;
      }
      case OreKind::Monoidal: {
        auto cert = monoidalEmptinessCertificate(nonzero(out.kernel), S);
        if (cert.status == Emptiness::Empty) {
          out.status = OreStatus::Violated;
          out.certificate = cert.contracted;
          return out;
        }
        break;
      }
    }
    out.witness = selectWitness(s, rr, S, out.kernel);
    out.status = out.witness ? OreStatus::Satisfied : OreStatus::Violated;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEliminable && e.code() != ErrorCode::BoundExceeded) throw;
    out.status = OreStatus::Unknown;
  }
  return out;
}

}  // namespace ore
