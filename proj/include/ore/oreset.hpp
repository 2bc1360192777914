#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ore/groebner.hpp"

namespace ore {

enum class OreKind { Monoidal, Geometric, Rational };

std::string_view oreKindName(OreKind kind);

class OreSet;
using OreSetPtr = std::shared_ptr<const OreSet>;

inline constexpr unsigned kDefaultMonoidalBound = 64;

/// A multiplicative set S of one of the three supported shapes, with the
/// auxiliary data the Ore computations need.
class OreSet : public std::enable_shared_from_this<OreSet> {
 public:
  /// The monoid generated by `gens`, all in one commuting block.
  static OreSetPtr monoidal(const AlgebraPtr& alg, std::vector<Element> gens, unsigned bound = kDefaultMonoidalBound);
  /// K[x] \ p for the x-block of a Weyl-type presentation. With `unverified`,
  /// any commuting block is accepted (the Ore property is then not implied;
  /// such sets are meant for refutation).
  static OreSetPtr geometric(const AlgebraPtr& alg, std::vector<Element> prime,
                             std::optional<std::vector<std::size_t>> block = std::nullopt, bool unverified = false);
  /// B \ {0} for the subalgebra B generated by `vars`.
  static OreSetPtr rational(const AlgebraPtr& alg, std::vector<std::size_t> vars);

  OreKind kind() const { return kind_; }
  const AlgebraPtr& algebra() const { return alg_; }
  /// Monoidal generators or prime ideal generators.
  const std::vector<Element>& generators() const { return gens_; }
  /// The commuting block (monoidal, geometric) or subalgebra variables (rational).
  const std::vector<std::size_t>& block() const { return block_; }
  /// Square-free part of the product of the monoidal generators.
  const Element& radicalGenerator() const { return g_; }
  /// Product of the monoidal generators.
  const Element& product() const { return h_; }
  unsigned bound() const { return bound_; }
  const GroebnerBasis& primeBasis() const { return primeGB_; }
  /// False for geometric sets built with `unverified`.
  bool verified() const { return verified_; }
  /// Geometric sets never check primality of the ideal.
  bool primalityAssumed() const { return kind_ == OreKind::Geometric; }

  /// The same set viewed inside the opposite algebra.
  OreSetPtr mirrored() const;
  /// The complement of block() among all variables.
  std::vector<std::size_t> complement() const;

 private:
  OreSet() = default;

  OreKind kind_ = OreKind::Rational;
  AlgebraPtr alg_;
  std::vector<Element> gens_;
  std::vector<std::size_t> block_;
  Element g_, h_;
  unsigned bound_ = kDefaultMonoidalBound;
  GroebnerBasis primeGB_;
  bool verified_ = true;

  mutable std::mutex mirrorMutex_;
  mutable OreSetPtr mirror_;
  mutable std::weak_ptr<const OreSet> mirrorBack_;
};

bool isInS(const Element& p, const OreSet& S);

/// Minimal m >= 0 with g^m in the ideal of G, starting at the bound forced by
/// leading monomials. BoundExceeded past `bound`.
unsigned monoidalIntersection(const GroebnerBasis& G, const Element& g, unsigned bound = kDefaultMonoidalBound);

enum class Emptiness { NonEmpty, Empty, Unknown };
std::string_view emptinessName(Emptiness e);

struct EmptinessCertificate {
  Emptiness status = Emptiness::Unknown;
  /// I ∩ K[block] when elimination was admissible.
  std::optional<GroebnerBasis> contracted;
};

/// Decides I ∩ [g] = ∅ by radical membership of g in I ∩ K[block].
EmptinessCertificate monoidalEmptinessCertificate(const std::vector<Element>& I, const OreSet& S);

struct GeometricIntersection {
  GroebnerBasis contracted;       // I ∩ K[x-block]
  std::vector<Element> m;         // its generators
  std::vector<Element> residues;  // their normal forms modulo p
  bool empty = true;
  std::optional<std::size_t> representative;
};

GeometricIntersection geometricIntersection(const std::vector<Element>& I, const OreSet& S);
GroebnerBasis rationalIntersection(const std::vector<Element>& I, const OreSet& S);

struct OreWitness {
  Element sTilde, rTilde;
  /// Candidate ideal ker(phi_{s,r}); lives in the opposite algebra for
  /// right-sided witnesses.
  GroebnerBasis candidates;
  std::optional<unsigned> exponent;  // monoidal m
};

/// s~ in S and r~ with s~ r = r~ s.
OreWitness leftOre(const Element& s, const Element& r, const OreSet& S);
/// t in S and p with r t = s p (returned as sTilde = t, rTilde = p).
OreWitness rightOre(const Element& s, const Element& r, const OreSet& S);

enum class OreStatus { Satisfied, Violated, Unknown };
std::string_view oreStatusName(OreStatus s);

struct OreRefutation {
  OreStatus status = OreStatus::Unknown;
  GroebnerBasis kernel;
  std::optional<OreWitness> witness;
  std::optional<GroebnerBasis> certificate;
};

OreRefutation disproveOrePair(const Element& s, const Element& r, const OreSet& S);

}  // namespace ore
