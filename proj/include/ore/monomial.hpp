#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ore {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a standard (PBW) monomial x_1^a_1 ... x_n^a_n. Unused
/// trailing slots stay zero, so equality and hashing ignore the arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }

  static Monomial variable(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

  /// Total degree restricted to the given variables.
  unsigned degreeIn(std::span<const std::size_t> vars) const {
    unsigned d = 0;
    for (auto v : vars) d += e[v];
    return d;
  }

  bool isOne() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  /// Requires b | a.
  friend Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

enum class OrderKind { Lex, DegLex, DegRevLex };

/// One block of a product order: the listed variables, compared by `kind`
/// in the listed sequence.
struct OrderBlock {
  std::vector<std::size_t> vars;
  OrderKind kind = OrderKind::DegRevLex;
  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Global monomial order built as a product of blocks. A single block over
/// all variables is a plain order; several blocks give elimination orders
/// where earlier blocks dominate.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks)) {}

  static MonomialOrder plain(OrderKind kind, std::size_t nvars);
  /// `eliminated` variables dominate the remaining ones; both blocks use `inner`.
  static MonomialOrder elimination(std::size_t nvars, std::span<const std::size_t> eliminated,
                                   OrderKind inner = OrderKind::DegRevLex);

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// The same order after renaming variable i to map[i].
  MonomialOrder renamed(std::span<const std::size_t> map) const;

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<OrderBlock> blocks_;
};

/// Parses "dp" / "degrevlex", "Dp" / "deglex", "lp" / "lex".
OrderKind parseOrderKind(const std::string& name);
std::string orderKindName(OrderKind kind);

}  // namespace ore
