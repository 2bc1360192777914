#include "oracles.hpp"

#include <algorithm>

namespace oracle {

Poly fromElement(const ore::Element& e, std::size_t nvars) {
  Poly p;
  for (const auto& t : e.terms()) {
    if (!t.coeff.isRational()) throw std::invalid_argument("oracle needs rational coefficients");
    Exp x(nvars);
    for (std::size_t i = 0; i < nvars; ++i) x[i] = t.mono[i];
    p[x] = t.coeff.rational();
  }
  return p;
}

ore::Element toElement(const Poly& p, const ore::AlgebraPtr& alg) {
  ore::TermList terms;
  for (const auto& [x, c] : p) {
    ore::Monomial m;
    for (std::size_t i = 0; i < x.size(); ++i) m[i] = static_cast<std::uint16_t>(x[i]);
    terms.push_back({ore::Coeff(c), m});
  }
  return ore::Element(alg, std::move(terms));
}

Poly add(const Poly& a, const Poly& b, const Q& scale) {
  Poly r = a;
  for (const auto& [x, c] : b) {
    Q v = r[x] + scale * c;
    if (v == 0)
      r.erase(x);
    else
      r[x] = v;
  }
  return r;
}

namespace {

Q binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Q(r);
}

Q factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Q(r);
}

}  // namespace

Poly weylProduct(const Poly& a, const Poly& b, std::size_t n) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      // Expand index by index; different indices commute.
      Poly partial{{Exp(2 * n, 0), ca * cb}};
      for (std::size_t i = 0; i < n; ++i) {
        int xa = ea[i], da = ea[n + i], xb = eb[i], db = eb[n + i];
        Poly next;
        for (const auto& [e, c] : partial) {
          for (int k = 0; k <= std::min(da, xb); ++k) {
            Exp f = e;
            f[i] = xa + xb - k;
            f[n + i] = da + db - k;
            next = add(next, Poly{{f, c * factorial(k) * binom(da, k) * binom(xb, k)}});
          }
        }
        partial = std::move(next);
      }
      out = add(out, partial);
    }
  }
  return out;
}

std::optional<std::vector<Q>> solveLinear(const std::vector<Poly>& cols, const Poly& rhs) {
  std::map<Exp, std::size_t> rowOf;
  for (const auto& c : cols)
    for (const auto& [x, v] : c) rowOf.try_emplace(x, rowOf.size());
  for (const auto& [x, v] : rhs) rowOf.try_emplace(x, rowOf.size());
  const std::size_t rows = rowOf.size(), n = cols.size();
  std::vector<std::vector<Q>> m(rows, std::vector<Q>(n + 1));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [x, v] : cols[j]) m[rowOf[x]][j] = v;
  for (const auto& [x, v] : rhs) m[rowOf[x]][n] = v;

  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && m[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][j];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      Q f = m[i][j];
      for (std::size_t k = j; k <= n; ++k) m[i][k] -= f * m[r][k];
    }
    pivotCol.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][n] != 0) return std::nullopt;
  std::vector<Q> sol(n);
  for (std::size_t i = 0; i < r; ++i) sol[pivotCol[i]] = m[i][n];
  return sol;
}

std::vector<Exp> monomialsUpTo(std::size_t nvars, int maxDeg) {
  std::vector<Exp> out{Exp(nvars, 0)};
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Exp> next;
    for (const auto& e : out) {
      int used = 0;
      for (int x : e) used += x;
      for (int k = 0; used + k <= maxDeg; ++k) {
        Exp f = e;
        f[v] = k;
        next.push_back(f);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::optional<Poly> weylLeftQuotient(const Poly& f, const Poly& s, std::size_t n, int maxDeg) {
  auto basis = monomialsUpTo(2 * n, maxDeg);
  std::vector<Poly> cols;
  for (const auto& e : basis) cols.push_back(weylProduct(Poly{{e, 1}}, s, n));
  auto sol = solveLinear(cols, f);
  if (!sol) return std::nullopt;
  Poly b;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((*sol)[j] != 0) b[basis[j]] = (*sol)[j];
  return b;
}

// ---------------------------------------------------------------------------
// Commutative Buchberger

namespace {

struct Cmp {
  Order order;
  // true when a > b
  bool greater(const Exp& a, const Exp& b) const {
    if (order == Order::Lex) return a > b;
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

const Exp& lead(const Poly& p, const Cmp& cmp) {
  auto best = p.begin();
  for (auto it = p.begin(); it != p.end(); ++it)
    if (cmp.greater(it->first, best->first)) best = it;
  return best->first;
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Poly shift(const Poly& p, const Exp& by, const Q& c) {
  Poly r;
  for (const auto& [x, v] : p) {
    Exp y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += by[i];
    r[y] = v * c;
  }
  return r;
}

Poly monicOf(Poly p, const Cmp& cmp) {
  if (p.empty()) return p;
  Q inv = 1 / p[lead(p, cmp)];
  for (auto& [x, v] : p) v *= inv;
  return p;
}

// Full reduction.
Poly reduce(Poly f, const std::vector<Poly>& G, const Cmp& cmp) {
  Poly rem;
  while (!f.empty()) {
    const Exp lt = lead(f, cmp);
    Q c = f[lt];
    bool done = false;
    for (const auto& g : G) {
      const Exp& lg = lead(g, cmp);
      if (!divides(lg, lt)) continue;
      Exp q = lt;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= lg[i];
      f = add(f, shift(g, q, c / g.at(lg)), -1);
      done = true;
      break;
    }
    if (!done) {
      rem[lt] = c;
      f.erase(lt);
    }
  }
  return rem;
}

}  // namespace

std::vector<Poly> commutativeGB(std::vector<Poly> gens, Order order) {
  Cmp cmp{order};
  std::vector<Poly> G;
  for (auto& g : gens)
    if (!g.empty()) G.push_back(monicOf(g, cmp));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exp &a = lead(G[i], cmp), &b = lead(G[j], cmp);
    Exp l(a.size());
    for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(a[k], b[k]);
    Exp la = l, lb = l;
    for (std::size_t k = 0; k < l.size(); ++k) {
      la[k] -= a[k];
      lb[k] -= b[k];
    }
    Poly sp = add(shift(G[i], la, 1 / G[i].at(a)), shift(G[j], lb, 1 / G[j].at(b)), -1);
    Poly r = reduce(sp, G, cmp);
    if (r.empty()) continue;
    G.push_back(monicOf(r, cmp));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // Minimalize, then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exp &li = lead(G[i], cmp), &lj = lead(G[j], cmp);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Exp lt = lead(minimal[i], cmp);
    Poly tail = minimal[i];
    Q c = tail[lt];
    tail.erase(lt);
    Poly r = reduce(tail, others, cmp);
    r[lt] = c;
    reduced.push_back(monicOf(r, cmp));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return cmp.greater(lead(b, cmp), lead(a, cmp)); });
  return reduced;
}

}  // namespace oracle
