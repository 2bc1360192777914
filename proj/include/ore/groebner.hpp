#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ore/galgebra.hpp"

namespace ore {

enum class PositionStrategy { PositionOverTerm, TermOverPosition };

struct VecTerm {
  Coeff coeff;
  std::size_t comp = 0;
  Monomial mono;
  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Element of the free left module A^rank. Under position-over-term, lower
/// component indices dominate.
class VectorElement {
 public:
  VectorElement() = default;
  VectorElement(AlgebraPtr alg, std::size_t rank, PositionStrategy pos = PositionStrategy::PositionOverTerm)
      : alg_(std::move(alg)), rank_(rank), pos_(pos) {}
  /// Sorts, merges and drops zero terms.
  VectorElement(AlgebraPtr alg, std::size_t rank, std::vector<VecTerm> terms,
                PositionStrategy pos = PositionStrategy::PositionOverTerm);

  static VectorElement fromComponents(const AlgebraPtr& alg, std::span<const Element> comps,
                                      PositionStrategy pos = PositionStrategy::PositionOverTerm);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t rank() const { return rank_; }
  PositionStrategy position() const { return pos_; }
  const std::vector<VecTerm>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  const VecTerm& leadingTerm() const { return terms_.front(); }
  /// All terms but the leading one.
  VectorElement tail() const;

  Element component(std::size_t i) const;
  std::vector<Element> components() const;
  /// True when every component below `k` vanishes.
  bool zeroBelow(std::size_t k) const;

  int compare(std::size_t ca, const Monomial& a, std::size_t cb, const Monomial& b) const;

  VectorElement scaled(const Coeff& c) const;
  VectorElement monic() const;
  /// c * m * (*this)
  VectorElement leftMultiply(const Coeff& c, const Monomial& m) const;
  VectorElement leftMultiply(const Element& f) const;

  friend VectorElement operator+(const VectorElement& a, const VectorElement& b);
  friend VectorElement operator-(const VectorElement& a, const VectorElement& b);
  friend bool operator==(const VectorElement& a, const VectorElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraPtr alg_;
  std::size_t rank_ = 1;
  PositionStrategy pos_ = PositionStrategy::PositionOverTerm;
  std::vector<VecTerm> terms_;
};

/// A left Gröbner basis of a left ideal (rank 1) or submodule.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(AlgebraPtr alg, std::size_t rank, PositionStrategy pos, std::vector<VectorElement> gens,
                bool reduced)
      : alg_(std::move(alg)), rank_(rank), pos_(pos), gens_(std::move(gens)), reduced_(reduced) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const MonomialOrder& order() const { return alg_->order(); }
  std::size_t rank() const { return rank_; }
  PositionStrategy position() const { return pos_; }
  bool reduced() const { return reduced_; }
  bool isZero() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }
  const std::vector<VectorElement>& vectors() const { return gens_; }
  /// Generators of an ideal basis (rank 1).
  std::vector<Element> elements() const;
  /// True when the basis generates the whole ring (rank 1).
  bool isUnit() const;

  const std::vector<VectorElement>& original() const { return original_; }
  void setOriginal(std::vector<VectorElement> o) { original_ = std::move(o); }

 private:
  AlgebraPtr alg_;
  std::size_t rank_ = 1;
  PositionStrategy pos_ = PositionStrategy::PositionOverTerm;
  std::vector<VectorElement> gens_;
  std::vector<VectorElement> original_;
  bool reduced_ = false;
};

GroebnerBasis leftGB(const std::vector<Element>& gens, const AlgebraPtr& alg);
GroebnerBasis leftGB(const std::vector<Element>& gens);
GroebnerBasis leftGB(const std::vector<VectorElement>& gens, const AlgebraPtr& alg, std::size_t rank,
                     PositionStrategy pos = PositionStrategy::PositionOverTerm);

Element leftNF(const Element& f, const GroebnerBasis& G);
VectorElement leftNF(const VectorElement& f, const GroebnerBasis& G);
bool inLeftIdeal(const Element& f, const GroebnerBasis& G);

/// Every S-polynomial of G reduces to zero.
bool satisfiesBuchbergerCriterion(const GroebnerBasis& G);

/// Reduced GB (in the original order) of I ∩ K<kept variables>. Throws
/// NotEliminable when no admissible elimination order exists.
GroebnerBasis eliminate(const std::vector<Element>& gens, std::span<const std::size_t> elimVars);

/// Left syzygies {(a_1..a_k) : sum a_i f_i = 0} as a module GB of rank k.
GroebnerBasis leftSyzygies(const std::vector<Element>& f);
/// Generators of {(a_1..a_k) : sum f_i a_i = 0}, via the opposite algebra.
std::vector<VectorElement> rightSyzygies(const std::vector<Element>& f);

/// GB of {a : a r ∈ R s}.
GroebnerBasis kernelPhi(const Element& s, const Element& r);

/// q with f = q s; NotDivisible otherwise.
Element rightDivideExact(const Element& f, const Element& s);
/// w with b = w r; NotDivisible when b ∉ R r.
Element liftWitness(const Element& b, const Element& r);
/// (a_1..a_k) with f = sum a_i g_i, or nullopt when f is not in the ideal.
std::optional<std::vector<Element>> liftCoefficients(const Element& f, const std::vector<Element>& gens);

}  // namespace ore
