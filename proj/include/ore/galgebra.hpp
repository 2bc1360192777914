#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ore/coeff.hpp"
#include "ore/error.hpp"
#include "ore/monomial.hpp"

namespace ore {

struct Term {
  Coeff coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};
using TermList = std::vector<Term>;

/// x_j x_i = c * x_i x_j + d for i < j. Pairs without a relation commute.
struct RelationSpec {
  std::size_t i = 0, j = 0;
  Coeff c{1};
  TermList d;
};

/// Input description of a G-algebra presentation.
struct GAlgebraSpec {
  std::vector<std::string> vars;
  std::vector<std::string> params;
  std::optional<MonomialOrder> order;  // degrevlex when unset
  std::vector<RelationSpec> relations;
  /// Declared (x_i, d_i) pairs; each adds d_i x_i = x_i d_i + 1.
  std::vector<std::pair<std::size_t, std::size_t>> weylPairs;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
  std::string summary() const;
};

class GAlgebra;
using AlgebraPtr = std::shared_ptr<const GAlgebra>;

namespace detail {

using Accumulator = std::unordered_map<Monomial, Coeff, MonomialHash>;

// Relation data plus the memo of straightened power pairs. Shared by every
// presentation that differs only in its monomial order.
class RelationTable {
 public:
  RelationTable(std::size_t n, std::size_t nparams);

  std::size_t nvars() const { return n_; }
  std::size_t nparams() const { return nparams_; }
  const Coeff& c(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }
  const TermList& d(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Coeff c, TermList d);
  bool commutes(std::size_t i, std::size_t j) const { return plain_[i * n_ + j]; }

  /// out += scale * (a * b) in the PBW basis.
  void multiplyInto(const Monomial& a, const Monomial& b, const Coeff& scale, Accumulator& out,
                    unsigned depth = 0) const;

 private:
  using PowerKey = std::array<std::uint32_t, 4>;
  struct PowerKeyHash {
    std::size_t operator()(const PowerKey& k) const noexcept {
      return ((k[0] * 131 + k[1]) * 65599 + k[2]) * 1000003 + k[3];
    }
  };
  std::shared_ptr<const TermList> powerProduct(std::size_t k, std::uint32_t p, std::size_t i, std::uint32_t q,
                                               unsigned depth) const;

  std::size_t n_, nparams_;
  std::vector<Coeff> c_;
  std::vector<TermList> d_;
  std::vector<char> plain_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<PowerKey, std::shared_ptr<const TermList>, PowerKeyHash> powers_;
};

}  // namespace detail

/// A G-algebra presentation: variables, coefficient field Q(params), a global
/// monomial order and the commutation relations. Immutable once shared.
class GAlgebra : public std::enable_shared_from_this<GAlgebra> {
 public:
  /// Builds and validates; throws InvalidPresentation with the report text.
  static AlgebraPtr create(const GAlgebraSpec& spec);
  /// Builds without validating (validatePresentation reports on it).
  static std::shared_ptr<GAlgebra> build(const GAlgebraSpec& spec);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t nparams() const { return params_.size(); }
  const MonomialOrder& order() const { return order_; }
  bool validated() const { return validated_; }
  std::optional<std::size_t> varIndex(std::string_view name) const;
  std::optional<std::size_t> paramIndex(std::string_view name) const;

  const Coeff& c(std::size_t i, std::size_t j) const { return table_->c(i, j); }
  const TermList& d(std::size_t i, std::size_t j) const { return table_->d(i, j); }
  bool commutes(std::size_t i, std::size_t j) const;
  /// True when every pair of the listed variables commutes.
  bool isCommutativeBlock(std::span<const std::size_t> vars) const;
  /// True when relations among the listed variables only involve them.
  bool isClosedBlock(std::span<const std::size_t> vars) const;

  bool isWeylType() const { return weylType_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& weylPairs() const { return weylPairs_; }
  /// The commuting x-block of a Weyl-type presentation.
  std::vector<std::size_t> xBlock() const;

  /// Sibling presentation with another order; nullopt when some d_ij violates
  /// the ordering condition under it.
  std::optional<AlgebraPtr> withOrder(const MonomialOrder& order) const;
  /// The opposite algebra, with variables in reversed order.
  AlgebraPtr opposite() const;
  /// Index of variable i in the opposite algebra.
  std::size_t oppositeIndex(std::size_t i) const { return nvars() - 1 - i; }
  /// True when both presentations share relation data (differ only in order).
  bool sameRing(const GAlgebra& other) const { return table_ == other.table_; }

  const detail::RelationTable& table() const { return *table_; }
  friend ValidationReport validatePresentation(GAlgebra& pres);

 private:
  GAlgebra() = default;

  std::vector<std::string> vars_, params_;
  MonomialOrder order_;
  std::shared_ptr<detail::RelationTable> table_;
  std::vector<std::pair<std::size_t, std::size_t>> weylPairs_;
  bool weylType_ = false;
  bool validated_ = false;

  mutable std::mutex derivedMutex_;
  mutable std::shared_ptr<const GAlgebra> opposite_;
  mutable std::weak_ptr<const GAlgebra> oppositeBack_;
  mutable std::map<std::string, std::weak_ptr<const GAlgebra>> siblings_;
};

/// Checks nonzero c_ij, the ordering condition on d_ij and the associativity
/// of all generator triples; marks the presentation validated on success.
ValidationReport validatePresentation(GAlgebra& pres);

/// A PBW polynomial: terms strictly decreasing in the ambient order, nonzero
/// coefficients.
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
  /// Sorts, merges and drops zero terms.
  Element(AlgebraPtr alg, TermList terms);

  static Element constant(AlgebraPtr alg, const Coeff& c);
  static Element variable(AlgebraPtr alg, std::size_t i);
  static Element monomial(AlgebraPtr alg, const Coeff& c, const Monomial& m);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermList& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
  const Term& leadingTerm() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const Coeff& lc() const { return terms_.front().coeff; }
  unsigned totalDegree() const;
  unsigned degreeIn(std::span<const std::size_t> vars) const;
  /// Indices of variables occurring with positive exponent.
  std::vector<std::size_t> support() const;
  bool involvesOnly(std::span<const std::size_t> vars) const;

  Element scaled(const Coeff& s) const;
  /// Divides by the leading coefficient; zero stays zero.
  Element monic() const;
  Element pow(unsigned e) const;
  /// The same polynomial viewed in a presentation of the same ring (re-sorted).
  Element inAlgebra(const AlgebraPtr& other) const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  friend bool operator==(const Element& a, const Element& b);

 private:
  friend Element multiply(const Element& a, const Element& b);
  AlgebraPtr alg_;
  TermList terms_;
};

/// The product in the G-algebra; throws PresentationMismatch across algebras.
Element multiply(const Element& a, const Element& b);
/// c * m * f for a monomial m.
Element multiplyLeft(const Coeff& c, const Monomial& m, const Element& f);

/// The image of a in the opposite algebra (same coefficients, reversed exponents).
Element toOpposite(const Element& a);
AlgebraPtr oppositeOf(const AlgebraPtr& pres);

/// Sorts terms of a list by the order, strictly decreasing, merging duplicates.
TermList normalizeTerms(const MonomialOrder& order, TermList terms);

}  // namespace ore
