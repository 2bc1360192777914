#include "ore/fraction.hpp"

#include <algorithm>

namespace ore {

std::string_view invertibilityName(Invertibility i) {
  switch (i) {
    case Invertibility::Yes: return "Yes";
    case Invertibility::No: return "No";
    case Invertibility::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

void requireUsable(const OreSetPtr& S) {
  if (!S) throw Error(ErrorCode::InvalidArgument, "fraction without Ore set");
  if (!S->verified())
    throw Error(ErrorCode::InvalidOreSet, "this Ore set is unverified and only usable for refutation");
}

Element inAmbient(const Element& e, const AlgebraPtr& alg) {
  if (e.isZero()) return Element(alg);
  if (e.algebra() != alg) throw Error(ErrorCode::PresentationMismatch, "element does not live in the Ore set's presentation");
  return e;
}

void requireDenominator(const Element& d, const OreSet& S) {
  if (!isInS(d, S)) throw Error(ErrorCode::InvalidArgument, "the denominator is not an element of S");
}

void requireCompatible(const Fraction& a, const Fraction& b) {
  if (a.oreSet() != b.oreSet()) throw Error(ErrorCode::PresentationMismatch, "fractions belong to different localizations");
}

LeftPair normalizedLeft(const Element& s, const Element& r) {
  Coeff inv = Coeff(1) / s.lc();
  return {s.scaled(inv), r.scaled(inv)};
}

RightPair normalizedRight(const Element& p, const Element& t) {
  Coeff inv = Coeff(1) / t.lc();
  return {p.scaled(inv), t.scaled(inv)};
}

}  // namespace

Fraction Fraction::fromLeft(OreSetPtr S, const Element& s, const Element& r) {
  requireUsable(S);
  const AlgebraPtr& alg = S->algebra();
  Element ss = inAmbient(s, alg), rr = inAmbient(r, alg);
  requireDenominator(ss, *S);
  Fraction f;
  f.S_ = std::move(S);
  f.left_ = normalizedLeft(ss, rr);
  return f;
}

Fraction Fraction::fromRight(OreSetPtr S, const Element& p, const Element& t) {
  requireUsable(S);
  const AlgebraPtr& alg = S->algebra();
  Element pp = inAmbient(p, alg), tt = inAmbient(t, alg);
  requireDenominator(tt, *S);
  Fraction f;
  f.S_ = std::move(S);
  f.right_ = normalizedRight(pp, tt);
  return f;
}

Fraction Fraction::fromBoth(OreSetPtr S, const LeftPair& left, const RightPair& right) {
  Fraction f = fromLeft(S, left.s, left.r);
  Fraction g = fromRight(std::move(S), right.p, right.t);
  if (f.left_->r * g.right_->t != f.left_->s * g.right_->p)
    throw Error(ErrorCode::InvalidArgument, "left and right pairs disagree (r t != s p)");
  f.right_ = g.right_;
  return f;
}

LeftPair leftPairOf(const Fraction& a) {
  if (a.left()) return *a.left();
  return *convertRightToLeft(a).left();
}

Fraction addFractions(const Fraction& a, const Fraction& b) {
  requireCompatible(a, b);
  LeftPair x = leftPairOf(a), y = leftPairOf(b);
  OreWitness w = leftOre(y.s, x.s, *a.oreSet());
  return Fraction::fromLeft(a.oreSet(), w.sTilde * x.s, w.sTilde * x.r + w.rTilde * y.r);
}

Fraction mulFractions(const Fraction& a, const Fraction& b) {
  requireCompatible(a, b);
  LeftPair x = leftPairOf(a), y = leftPairOf(b);
  OreWitness w = leftOre(y.s, x.r, *a.oreSet());
  return Fraction::fromLeft(a.oreSet(), w.sTilde * x.s, w.rTilde * y.r);
}

bool areEqual(const Fraction& a, const Fraction& b) {
  requireCompatible(a, b);
  LeftPair x = leftPairOf(a), y = leftPairOf(b);
  OreWitness w = leftOre(x.s, y.s, *a.oreSet());
  return w.sTilde * y.r == w.rTilde * x.r;
}

Fraction convertLeftToRight(const Fraction& a) {
  if (!a.left()) throw Error(ErrorCode::InvalidArgument, "fraction has no left representation");
  if (a.right()) return a;
  const LeftPair& x = *a.left();
  OreWitness w = rightOre(x.s, x.r, *a.oreSet());
  return Fraction::fromBoth(a.oreSet(), x, {w.rTilde, w.sTilde});
}

Fraction convertRightToLeft(const Fraction& a) {
  if (!a.right()) throw Error(ErrorCode::InvalidArgument, "fraction has no right representation");
  if (a.left()) return a;
  const RightPair& y = *a.right();
  OreWitness w = leftOre(y.t, y.p, *a.oreSet());
  return Fraction::fromBoth(a.oreSet(), {w.sTilde, w.rTilde}, y);
}

InvertibilityResult isInvertible(const Fraction& a) {
  InvertibilityResult out;
  LeftPair x = leftPairOf(a);
  const OreSet& S = *a.oreSet();
  const AlgebraPtr& alg = S.algebra();
  if (x.r.isZero()) {
    out.status = Invertibility::No;
    return out;
  }
  auto yes = [&](Element w, Element b) {
    out.status = Invertibility::Yes;
    out.w = std::move(w);
    out.b = std::move(b);
    return out;
  };
  if (isInS(x.r, S)) return yes(Element::constant(alg, 1), x.r);
  switch (S.kind()) {
    case OreKind::Geometric:
      // K[x] \ p is saturated: r is a unit iff r ∈ S.
      out.status = Invertibility::No;
      return out;
    case OreKind::Rational: {
      GroebnerBasis B = rationalIntersection({x.r}, S);
      if (B.isZero()) {
        out.status = Invertibility::No;
        return out;
      }
      Element b = B.elements().front();
      return yes(liftWitness(b, x.r), b);
    }
    case OreKind::Monoidal: {
      auto cert = monoidalEmptinessCertificate({x.r}, S);
      if (cert.status == Emptiness::Empty) {
        out.status = Invertibility::No;
        return out;
      }
      unsigned m = 0;
      try {
        m = monoidalIntersection(leftGB({x.r}, alg), S.radicalGenerator(), S.bound());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundExceeded) throw;
        return out;
      }
      Element b = S.radicalGenerator().pow(m);
      if (!isInS(b, S)) b = S.product().pow(m);
      return yes(liftWitness(b, x.r), b);
    }
  }
  return out;
}

Fraction invertFraction(const Fraction& a) {
  InvertibilityResult res = isInvertible(a);
  if (res.status == Invertibility::No) throw Error(ErrorCode::NotInvertible, "the fraction is not invertible");
  if (res.status == Invertibility::Unknown)
    throw Error(ErrorCode::Undecided, "invertibility could not be decided within the search bound");
  LeftPair x = leftPairOf(a);
  return Fraction::fromLeft(a.oreSet(), *res.b, *res.w * x.s);
}

CancelResult cancelSyzygy(const Fraction& a) {
  LeftPair x = leftPairOf(a);
  CancelResult out;
  out.representations.push_back(Fraction::fromLeft(a.oreSet(), x.s, x.r));
  const OreSet& S = *a.oreSet();
  if (!x.r.isZero()) {
    auto M = rightSyzygies({x.s, x.r});
    const VectorElement* pick = nullptr;
    for (const auto& v : M) {
      if (v.isZero()) continue;
      if (!pick || v.compare(v.leadingTerm().comp, v.leadingTerm().mono, pick->leadingTerm().comp,
                             pick->leadingTerm().mono) < 0)
        pick = &v;
    }
    if (pick) {
      GroebnerBasis N = leftSyzygies({pick->component(0), pick->component(1)});
      for (const auto& v : N.vectors()) {
        Element q = v.component(0), p = v.component(1);
        if (!isInS(q, S)) continue;
        Fraction f = Fraction::fromLeft(a.oreSet(), q, p);
        bool seen = std::any_of(out.representations.begin(), out.representations.end(), [&](const Fraction& g) {
          return g.left()->s == f.left()->s && g.left()->r == f.left()->r;
        });
        if (!seen) out.representations.push_back(std::move(f));
      }
    }
  }
  for (std::size_t i = 1; i < out.representations.size(); ++i)
    if (out.representations[i].left()->s.totalDegree() < out.representations[out.best].left()->s.totalDegree())
      out.best = i;
  return out;
}

}  // namespace ore
