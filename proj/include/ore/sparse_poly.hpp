#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ore {

/// Commutative sparse polynomial over an exact field F in a fixed number of
/// variables. Terms are kept in strictly decreasing lex order (variable 0 is
/// the most significant) and carry nonzero coefficients.
///
/// F must be constructible from int and provide the field operations and
/// equality. This type backs both the rational-function coefficients and the
/// gcd computations in commuting variable blocks.
template <class F>
class SparsePoly {
 public:
  using Exps = std::vector<std::uint32_t>;
  using Term = std::pair<Exps, F>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const F& c) {
    SparsePoly p(nvars);
    if (!(c == F(0))) p.terms_.push_back({Exps(nvars, 0), c});
    return p;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t v, std::uint32_t power = 1) {
    SparsePoly p(nvars);
    Exps e(nvars, 0);
    e.at(v) = power;
    p.terms_.push_back({std::move(e), F(1)});
    return p;
  }

  /// Builds a polynomial from arbitrary terms; combines duplicates, drops zeros.
  static SparsePoly fromTerms(std::size_t nvars, std::vector<Term> terms) {
    std::map<Exps, F, std::greater<>> acc;
    for (auto& [e, c] : terms) {
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted) it->second = F(it->second + c);
    }
    SparsePoly p(nvars);
    for (auto& [e, c] : acc)
      if (!(c == F(0))) p.terms_.push_back({e, c});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && totalDegree(terms_[0].first) == 0);
  }
  /// Coefficient of the monomial 1.
  F constantTerm() const {
    if (terms_.empty() || totalDegree(terms_.back().first) != 0) return F(0);
    return terms_.back().second;
  }

  const Term& leadingTerm() const { return terms_.front(); }
  const F& leadingCoeff() const { return terms_.front().second; }

  static std::uint32_t totalDegree(const Exps& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  std::uint32_t totalDegree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, totalDegree(t.first));
    return d;
  }

  std::uint32_t degreeIn(std::size_t v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[v]);
    return d;
  }

  bool involves(std::size_t v) const { return degreeIn(v) > 0; }

  /// Coefficient of x_v^k, as a polynomial not involving x_v.
  SparsePoly coeffOf(std::size_t v, std::uint32_t k) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != k) continue;
      Exps f = e;
      f[v] = 0;
      r.terms_.push_back({std::move(f), c});
    }
    // Zeroing one coordinate preserves relative lex order.
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = F(-t.second);
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    std::size_t n = std::max(a.nvars_, b.nvars_);
    if (a.isZero() || b.isZero()) return SparsePoly(n);
    std::map<Exps, F, std::greater<>> acc;
    Exps e(n);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        F prod = ca * cb;
        auto [it, inserted] = acc.try_emplace(e, prod);
        if (!inserted) it->second = F(it->second + prod);
      }
    SparsePoly r(n);
    for (auto& [k, c] : acc)
      if (!(c == F(0))) r.terms_.push_back({k, c});
    return r;
  }

  SparsePoly scaled(const F& s) const {
    if (s == F(0)) return SparsePoly(nvars_);
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = F(t.second * s);
    return r;
  }

  SparsePoly shifted(const Exps& mono) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < nvars_; ++i) t.first[i] += mono[i];
    return r;
  }

  SparsePoly monic() const {
    if (isZero()) return *this;
    F inv = F(F(1) / leadingCoeff());
    return scaled(inv);
  }

  SparsePoly derivative(std::size_t v) const {
    std::vector<Term> out;
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exps f = e;
      f[v] -= 1;
      out.push_back({std::move(f), F(c * F(static_cast<int>(e[v])))});
    }
    return fromTerms(nvars_, std::move(out));
  }

  /// Exact division; nullopt when `d` does not divide `*this`.
  std::optional<SparsePoly> dividedBy(const SparsePoly& d) const {
    if (d.isZero()) throw std::domain_error("polynomial division by zero");
    SparsePoly q(nvars_), r = *this;
    const auto& [ld, lc] = d.leadingTerm();
    while (!r.isZero()) {
      const auto& [lr, cr] = r.leadingTerm();
      Exps diff(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (lr[i] < ld[i]) return std::nullopt;
        diff[i] = lr[i] - ld[i];
      }
      F c = cr / lc;
      SparsePoly t(nvars_);
      t.terms_.push_back({diff, c});
      q = q + t;
      r = r - d.shifted(diff).scaled(c);
    }
    return q;
  }

  /// Sparse pseudo-remainder of *this by b with respect to variable v.
  SparsePoly pseudoRemainder(const SparsePoly& b, std::size_t v) const {
    std::uint32_t db = b.degreeIn(v);
    SparsePoly lb = b.coeffOf(v, db);
    SparsePoly r = *this;
    while (!r.isZero()) {
      std::uint32_t dr = r.degreeIn(v);
      if (dr < db) break;
      SparsePoly lr = r.coeffOf(v, dr);
      r = lb * r - lr * b * variable(nvars_, v, dr - db);
    }
    return r;
  }

 private:
  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool negate) {
    SparsePoly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first > i->first) {
        r.terms_.push_back({j->first, negate ? F(-j->second) : j->second});
        ++j;
      } else {
        F c = negate ? F(i->second - j->second) : F(i->second + j->second);
        if (!(c == F(0))) r.terms_.push_back({i->first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

namespace detail {

template <class F>
std::optional<std::size_t> firstVariable(const SparsePoly<F>& a, const SparsePoly<F>& b, std::size_t from) {
  for (std::size_t v = from; v < std::max(a.nvars(), b.nvars()); ++v)
    if (a.involves(v) || b.involves(v)) return v;
  return std::nullopt;
}

template <class F>
SparsePoly<F> gcdFrom(const SparsePoly<F>& f, const SparsePoly<F>& g, std::size_t from);

// Gcd of the coefficients of f viewed as a polynomial in x_v.
template <class F>
SparsePoly<F> contentIn(const SparsePoly<F>& f, std::size_t v) {
  SparsePoly<F> c(f.nvars());
  for (std::uint32_t k = f.degreeIn(v) + 1; k-- > 0;) {
    SparsePoly<F> ck = f.coeffOf(v, k);
    if (ck.isZero()) continue;
    c = c.isZero() ? ck.monic() : gcdFrom(c, ck, v + 1);
    if (c.isConstant()) break;
  }
  return c;
}

template <class F>
SparsePoly<F> gcdFrom(const SparsePoly<F>& f, const SparsePoly<F>& g, std::size_t from) {
  std::size_t n = std::max(f.nvars(), g.nvars());
  if (f.isZero()) return g.monic();
  if (g.isZero()) return f.monic();
  auto first = firstVariable(f, g, from);
  if (!first) return SparsePoly<F>::constant(n, F(1));
  std::size_t v = *first;
  if (!f.involves(v) || !g.involves(v)) {
    // The gcd cannot involve x_v; reduce to coefficient gcds.
    const SparsePoly<F>& h = f.involves(v) ? f : g;
    const SparsePoly<F>& o = f.involves(v) ? g : f;
    return gcdFrom(contentIn(h, v), o, v + 1);
  }
  SparsePoly<F> cf = contentIn(f, v), cg = contentIn(g, v);
  SparsePoly<F> c = gcdFrom(cf, cg, v + 1);
  SparsePoly<F> a = *f.dividedBy(cf), b = *g.dividedBy(cg);
  if (a.degreeIn(v) < b.degreeIn(v)) std::swap(a, b);
  while (!b.isZero() && b.degreeIn(v) > 0) {
    SparsePoly<F> r = a.pseudoRemainder(b, v);
    a = std::move(b);
    if (r.isZero()) {
      b = SparsePoly<F>(n);
      break;
    }
    b = r.degreeIn(v) == 0 ? SparsePoly<F>::constant(n, F(1)) : *r.dividedBy(contentIn(r, v));
  }
  if (!b.isZero()) return c.monic();  // primitive parts coprime in x_v
  SparsePoly<F> pa = *a.dividedBy(contentIn(a, v));
  return (c * pa).monic();
}

}  // namespace detail

/// Monic gcd in F[x_1..x_n]; gcd(0, 0) = 0.
template <class F>
SparsePoly<F> gcd(const SparsePoly<F>& f, const SparsePoly<F>& g) {
  if (f.isZero() && g.isZero()) return f;
  return detail::gcdFrom(f, g, 0);
}

}  // namespace ore
