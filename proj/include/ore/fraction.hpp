#pragma once

#include <optional>
#include <vector>

#include "ore/oreset.hpp"

namespace ore {

struct LeftPair {
  Element s, r;  // s^-1 r
};

struct RightPair {
  Element p, t;  // p t^-1
};

/// An element of the Ore localization, stored as [s, r, p, t]: a left pair,
/// a right pair, or both (then r t = s p). Denominators are kept monic.
class Fraction {
 public:
  static Fraction fromLeft(OreSetPtr S, const Element& s, const Element& r);
  static Fraction fromRight(OreSetPtr S, const Element& p, const Element& t);
  static Fraction fromBoth(OreSetPtr S, const LeftPair& left, const RightPair& right);

  const OreSetPtr& oreSet() const { return S_; }
  const AlgebraPtr& algebra() const { return S_->algebra(); }
  const std::optional<LeftPair>& left() const { return left_; }
  const std::optional<RightPair>& right() const { return right_; }

 private:
  Fraction() = default;
  OreSetPtr S_;
  std::optional<LeftPair> left_;
  std::optional<RightPair> right_;
};

/// The left pair, converting from the right pair when needed.
LeftPair leftPairOf(const Fraction& a);

Fraction addFractions(const Fraction& a, const Fraction& b);
Fraction mulFractions(const Fraction& a, const Fraction& b);
bool areEqual(const Fraction& a, const Fraction& b);

Fraction convertLeftToRight(const Fraction& a);
Fraction convertRightToLeft(const Fraction& a);

enum class Invertibility { Yes, No, Unknown };
std::string_view invertibilityName(Invertibility i);

struct InvertibilityResult {
  Invertibility status = Invertibility::Unknown;
  /// For Yes: b = w r lies in S.
  std::optional<Element> w, b;
};

InvertibilityResult isInvertible(const Fraction& a);
/// The inverse (b, w s); NotInvertible or Undecided otherwise.
Fraction invertFraction(const Fraction& a);

struct CancelResult {
  std::vector<Fraction> representations;  // the input comes first
  std::size_t best = 0;                   // minimal denominator degree
};

CancelResult cancelSyzygy(const Fraction& a);

}  // namespace ore
