#include "ore/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ore {

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

MonomialOrder MonomialOrder::plain(OrderKind kind, std::size_t nvars) {
  OrderBlock b;
  b.vars.resize(nvars);
  std::iota(b.vars.begin(), b.vars.end(), 0);
  b.kind = kind;
  return MonomialOrder({b});
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::span<const std::size_t> eliminated,
                                         OrderKind inner) {
  OrderBlock first{{}, inner}, second{{}, inner};
  for (std::size_t i = 0; i < nvars; ++i) {
    bool elim = std::find(eliminated.begin(), eliminated.end(), i) != eliminated.end();
    (elim ? first : second).vars.push_back(i);
  }
  std::vector<OrderBlock> blocks;
  if (!first.vars.empty()) blocks.push_back(first);
  if (!second.vars.empty()) blocks.push_back(second);
  return MonomialOrder(std::move(blocks));
}

namespace {

int compareBlock(const OrderBlock& b, const Monomial& x, const Monomial& y) {
  if (b.kind != OrderKind::Lex) {
    unsigned dx = 0, dy = 0;
    for (auto v : b.vars) {
      dx += x[v];
      dy += y[v];
    }
    if (dx != dy) return dx < dy ? -1 : 1;
  }
  if (b.kind == OrderKind::DegRevLex) {
    for (auto it = b.vars.rbegin(); it != b.vars.rend(); ++it)
      if (x[*it] != y[*it]) return x[*it] > y[*it] ? -1 : 1;
    return 0;
  }
  for (auto v : b.vars)
    if (x[v] != y[v]) return x[v] < y[v] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_)
    if (int c = compareBlock(blk, a, b)) return c;
  return 0;
}

MonomialOrder MonomialOrder::renamed(std::span<const std::size_t> map) const {
  std::vector<OrderBlock> out = blocks_;
  for (auto& b : out)
    for (auto& v : b.vars) v = map[v];
  return MonomialOrder(std::move(out));
}

std::string orderKindName(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lp";
    case OrderKind::DegLex: return "Dp";
    case OrderKind::DegRevLex: return "dp";
  }
  return "?";
}

OrderKind parseOrderKind(const std::string& name) {
  if (name == "dp" || name == "degrevlex") return OrderKind::DegRevLex;
  if (name == "Dp" || name == "deglex") return OrderKind::DegLex;
  if (name == "lp" || name == "lex") return OrderKind::Lex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::string MonomialOrder::describe() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += ",";
    out += orderKindName(b.kind) + "(";
    for (std::size_t i = 0; i < b.vars.size(); ++i) out += (i ? " " : "") + std::to_string(b.vars[i]);
    out += ")";
  }
  return out;
}

}  // namespace ore
