#include "ore/galgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ore {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::NotEliminable: return "NotEliminable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::IntersectionEmpty: return "IntersectionEmpty";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::InvalidOreSet: return "InvalidOreSet";
    case ErrorCode::RightOreFailure: return "RightOreFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndefinedName: return "UndefinedName";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string ValidationReport::summary() const {
  if (valid) return "valid";
  std::string out = "invalid: ";
  for (std::size_t i = 0; i < problems.size(); ++i) out += (i ? "; " : "") + problems[i];
  return out;
}

namespace detail {

namespace {

constexpr unsigned kMaxRewriteDepth = 4000;

void accumulate(Accumulator& acc, const Monomial& m, const Coeff& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

TermList drain(Accumulator& acc) {
  TermList out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.isZero()) out.push_back({c, m});
  return out;
}

}  // namespace

RelationTable::RelationTable(std::size_t n, std::size_t nparams)
    : n_(n), nparams_(nparams), c_(n * n, Coeff(1)), d_(n * n), plain_(n * n, 1) {}

void RelationTable::set(std::size_t i, std::size_t j, Coeff c, TermList d) {
  plain_[i * n_ + j] = plain_[j * n_ + i] = (c.isOne() && d.empty()) ? 1 : 0;
  c_[i * n_ + j] = std::move(c);
  d_[i * n_ + j] = std::move(d);
}

void RelationTable::multiplyInto(const Monomial& a, const Monomial& b, const Coeff& scale, Accumulator& out,
                                 unsigned depth) const {
  if (depth > kMaxRewriteDepth)
    throw Error(ErrorCode::Internal, "PBW rewriting did not terminate (ordering condition violated?)");
  bool commuting = true;
  std::size_t k = 0, i = n_;
  bool haveK = false;
  for (std::size_t v = n_; v-- > 0;)
    if (a[v]) {
      k = v;
      haveK = true;
      break;
    }
  for (std::size_t v = 0; v < n_; ++v)
    if (b[v]) {
      i = v;
      break;
    }
  if (haveK && i < n_ && k > i) {
    for (std::size_t u = i + 1; u <= k && commuting; ++u) {
      if (!a[u]) continue;
      for (std::size_t w = i; w < u; ++w)
        if (b[w] && !plain_[w * n_ + u]) {
          commuting = false;
          break;
        }
    }
  }
  if (commuting) {
    accumulate(out, a + b, scale);
    return;
  }
  Monomial a1 = a, b1 = b;
  a1[k] = 0;
  b1[i] = 0;
  auto swapped = powerProduct(k, a[k], i, b[i], depth + 1);
  for (const auto& [c, m] : *swapped) {
    Coeff s = scale * c;
    if (a1.isOne()) {
      multiplyInto(m, b1, s, out, depth + 1);
      continue;
    }
    Accumulator left;
    multiplyInto(a1, m, s, left, depth + 1);
    for (const auto& [m2, c2] : left)
      if (!c2.isZero()) multiplyInto(m2, b1, c2, out, depth + 1);
  }
}

std::shared_ptr<const TermList> RelationTable::powerProduct(std::size_t k, std::uint32_t p, std::size_t i,
                                                            std::uint32_t q, unsigned depth) const {
  PowerKey key{static_cast<std::uint32_t>(k), p, static_cast<std::uint32_t>(i), q};
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  }
  const Coeff& cik = c(i, k);
  const TermList& dik = d(i, k);
  Monomial swapped = Monomial::variable(i, static_cast<std::uint16_t>(q)) + Monomial::variable(k, static_cast<std::uint16_t>(p));
  TermList result;
  if (dik.empty()) {
    result.push_back({cik.pow(p * q), swapped});
  } else if (p == 1 && q == 1) {
    result.push_back({cik, swapped});
    result.insert(result.end(), dik.begin(), dik.end());
  } else {
    Accumulator acc;
    if (p > 1) {
      // x_k^p x_i^q = x_k (x_k^(p-1) x_i^q)
      auto inner = powerProduct(k, p - 1, i, q, depth + 1);
      Monomial xk = Monomial::variable(k);
      for (const auto& [c, m] : *inner) multiplyInto(xk, m, c, acc, depth + 1);
    } else {
      // x_k x_i^q = (x_k x_i^(q-1)) x_i
      auto inner = powerProduct(k, 1, i, q - 1, depth + 1);
      Monomial xi = Monomial::variable(i);
      for (const auto& [c, m] : *inner) multiplyInto(m, xi, c, acc, depth + 1);
    }
    result = drain(acc);
  }
  auto shared = std::make_shared<const TermList>(std::move(result));
  std::lock_guard lock(mutex_);
  return powers_.try_emplace(key, shared).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Presentations

namespace {

void requireUniqueNames(const GAlgebraSpec& spec) {
  std::set<std::string> seen;
  for (const auto* list : {&spec.vars, &spec.params})
    for (const auto& v : *list)
      if (v.empty() || !seen.insert(v).second)
        throw Error(ErrorCode::InvalidPresentation, "duplicate or empty name '" + v + "'");
}

}  // namespace

std::shared_ptr<GAlgebra> GAlgebra::build(const GAlgebraSpec& spec) {
  const std::size_t n = spec.vars.size();
  if (n == 0 || n > kMaxVars)
    throw Error(ErrorCode::InvalidPresentation, "variable count must be in 1.." + std::to_string(kMaxVars));
  requireUniqueNames(spec);
  std::shared_ptr<GAlgebra> alg(new GAlgebra());
  alg->vars_ = spec.vars;
  alg->params_ = spec.params;
  alg->order_ = spec.order.value_or(MonomialOrder::plain(OrderKind::DegRevLex, n));
  alg->table_ = std::make_shared<detail::RelationTable>(n, spec.params.size());
  std::set<std::pair<std::size_t, std::size_t>> defined;
  auto define = [&](std::size_t i, std::size_t j, Coeff c, TermList d) {
    if (i >= j || j >= n) throw Error(ErrorCode::InvalidPresentation, "relation indices must satisfy i < j < n");
    if (!defined.insert({i, j}).second)
      throw Error(ErrorCode::InvalidPresentation,
                  "duplicate relation for " + spec.vars[j] + "*" + spec.vars[i]);
    alg->table_->set(i, j, std::move(c), normalizeTerms(alg->order_, std::move(d)));
  };
  for (const auto& r : spec.relations) define(r.i, r.j, r.c, r.d);
  for (auto [x, dx] : spec.weylPairs) {
    if (x >= n || dx >= n || x == dx) throw Error(ErrorCode::InvalidPresentation, "bad Weyl pair");
    Term unit{Coeff(x < dx ? 1 : -1), Monomial{}};
    define(std::min(x, dx), std::max(x, dx), Coeff(1), {unit});
  }
  alg->weylPairs_ = spec.weylPairs;
  return alg;
}

AlgebraPtr GAlgebra::create(const GAlgebraSpec& spec) {
  auto alg = build(spec);
  ValidationReport report = validatePresentation(*alg);
  if (!report.valid) throw Error(ErrorCode::InvalidPresentation, report.summary());
  return alg;
}

std::optional<std::size_t> GAlgebra::varIndex(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> GAlgebra::paramIndex(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  return std::nullopt;
}

bool GAlgebra::commutes(std::size_t i, std::size_t j) const {
  return i == j || table_->commutes(std::min(i, j), std::max(i, j));
}

bool GAlgebra::isCommutativeBlock(std::span<const std::size_t> vars) const {
  for (auto a : vars)
    for (auto b : vars)
      if (!commutes(a, b)) return false;
  return true;
}

bool GAlgebra::isClosedBlock(std::span<const std::size_t> vars) const {
  auto inBlock = [&](std::size_t v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); };
  for (auto a : vars)
    for (auto b : vars) {
      if (a >= b) continue;
      for (const auto& t : d(a, b))
        for (std::size_t v = 0; v < nvars(); ++v)
          if (t.mono[v] && !inBlock(v)) return false;
    }
  return true;
}

std::vector<std::size_t> GAlgebra::xBlock() const {
  std::vector<std::size_t> out;
  for (auto [x, dx] : weylPairs_) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AlgebraPtr> GAlgebra::withOrder(const MonomialOrder& order) const {
  if (order == order_) return shared_from_this();
  for (std::size_t i = 0; i < nvars(); ++i)
    for (std::size_t j = i + 1; j < nvars(); ++j) {
      Monomial xixj = Monomial::variable(i) + Monomial::variable(j);
      for (const auto& t : d(i, j))
        if (!order.less(t.mono, xixj)) return std::nullopt;
    }
  std::string key = order.describe();
  std::lock_guard lock(derivedMutex_);
  if (auto it = siblings_.find(key); it != siblings_.end())
    if (auto alive = it->second.lock()) return alive;
  std::shared_ptr<GAlgebra> sib(new GAlgebra());
  sib->vars_ = vars_;
  sib->params_ = params_;
  sib->order_ = order;
  sib->table_ = table_;
  sib->weylPairs_ = weylPairs_;
  sib->weylType_ = weylType_;
  sib->validated_ = validated_;
  siblings_[key] = sib;
  return AlgebraPtr(sib);
}

AlgebraPtr GAlgebra::opposite() const {
  std::lock_guard lock(derivedMutex_);
  if (auto back = oppositeBack_.lock()) return back;
  if (opposite_) return opposite_;
  const std::size_t n = nvars();
  std::shared_ptr<GAlgebra> op(new GAlgebra());
  std::vector<std::size_t> map(n);
  for (std::size_t v = 0; v < n; ++v) map[v] = n - 1 - v;
  op->vars_.assign(vars_.rbegin(), vars_.rend());
  op->params_ = params_;
  op->order_ = order_.renamed(map);
  op->table_ = std::make_shared<detail::RelationTable>(n, nparams());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t i = n - 1 - b, j = n - 1 - a;
      TermList d;
      for (const auto& t : table_->d(i, j)) {
        Monomial m;
        for (std::size_t v = 0; v < n; ++v) m[map[v]] = t.mono[v];
        d.push_back({t.coeff, m});
      }
      if (!table_->commutes(i, j)) op->table_->set(a, b, table_->c(i, j), normalizeTerms(op->order_, std::move(d)));
    }
  for (auto [x, dx] : weylPairs_) op->weylPairs_.emplace_back(map[x], map[dx]);
  op->weylType_ = false;  // the opposite relation is d x = x d - 1
  op->validated_ = validated_;
  op->oppositeBack_ = shared_from_this();
  opposite_ = op;
  return opposite_;
}

AlgebraPtr oppositeOf(const AlgebraPtr& pres) { return pres->opposite(); }

ValidationReport validatePresentation(GAlgebra& pres) {
  ValidationReport report;
  const std::size_t n = pres.nvars();
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  const auto& names = pres.vars();
  bool ordered = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pres.c(i, j).isZero()) fail("c(" + names[i] + "," + names[j] + ") is zero");
      Monomial xixj = Monomial::variable(i) + Monomial::variable(j);
      for (const auto& t : pres.d(i, j))
        if (!pres.order().less(t.mono, xixj)) {
          fail("leading monomial of d(" + names[i] + "," + names[j] + ") is not smaller than " + names[i] + "*" +
               names[j]);
          ordered = false;
          break;
        }
    }
  if (ordered) {
    // Associativity probe on generator triples x_k > x_j > x_i.
    AlgebraPtr self = pres.shared_from_this();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Element xi = Element::variable(self, i), xj = Element::variable(self, j), xk = Element::variable(self, k);
          try {
            if (multiply(multiply(xk, xj), xi) != multiply(xk, multiply(xj, xi)))
              fail("associativity fails for (" + names[k] + "*" + names[j] + ")*" + names[i]);
          } catch (const Error& e) {
            fail(std::string("rewriting failed for triple: ") + e.what());
          }
        }
  }
  if (!pres.weylPairs_.empty()) {
    std::vector<int> role(n, -1);
    bool ok = true;
    for (auto [x, dx] : pres.weylPairs_) {
      if (role[x] != -1 || role[dx] != -1) ok = false;
      role[x] = 0;
      role[dx] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (role[v] == -1) ok = false;
    if (ok) {
      std::set<std::pair<std::size_t, std::size_t>> paired;
      for (auto [x, dx] : pres.weylPairs_) paired.insert({std::min(x, dx), std::max(x, dx)});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!paired.count({i, j}) && !pres.commutes(i, j)) ok = false;
    }
    if (!ok) fail("declared Weyl pairs do not split the variables into commuting x- and d-blocks");
    pres.weylType_ = ok;
  }
  pres.validated_ = report.valid;
  return report;
}

// ---------------------------------------------------------------------------
// Elements

TermList normalizeTerms(const MonomialOrder& order, TermList terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (out.size() >= 2 && out[out.size() - 2].coeff.isZero()) out.erase(out.end() - 2);
  }
  if (!out.empty() && out.back().coeff.isZero()) out.pop_back();
  return out;
}

Element::Element(AlgebraPtr alg, TermList terms) : alg_(std::move(alg)) {
  terms_ = normalizeTerms(alg_->order(), std::move(terms));
}

Element Element::constant(AlgebraPtr alg, const Coeff& c) {
  Element e(std::move(alg));
  if (!c.isZero()) e.terms_.push_back({c, Monomial{}});
  return e;
}

Element Element::variable(AlgebraPtr alg, std::size_t i) {
  if (i >= alg->nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Element e(std::move(alg));
  e.terms_.push_back({Coeff(1), Monomial::variable(i)});
  return e;
}

Element Element::monomial(AlgebraPtr alg, const Coeff& c, const Monomial& m) {
  Element e(std::move(alg));
  if (!c.isZero()) e.terms_.push_back({c, m});
  return e;
}

unsigned Element::totalDegree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Element::degreeIn(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degreeIn(vars));
  return d;
}

std::vector<std::size_t> Element::support() const {
  std::vector<std::size_t> out;
  if (!alg_) return out;
  for (std::size_t v = 0; v < alg_->nvars(); ++v)
    for (const auto& t : terms_)
      if (t.mono[v]) {
        out.push_back(v);
        break;
      }
  return out;
}

bool Element::involvesOnly(std::span<const std::size_t> vars) const {
  for (auto v : support())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
  return true;
}

Element Element::scaled(const Coeff& s) const {
  if (s.isZero()) return Element(alg_);
  Element r = *this;
  for (auto& t : r.terms_) t.coeff *= s;
  return r;
}

Element Element::monic() const {
  if (isZero() || lc().isOne()) return *this;
  return scaled(Coeff(1) / lc());
}

Element Element::pow(unsigned e) const {
  Element r = constant(alg_, Coeff(1));
  for (unsigned i = 0; i < e; ++i) r = multiply(r, *this);
  return r;
}

Element Element::inAlgebra(const AlgebraPtr& other) const {
  if (alg_ == other) return *this;
  if (!alg_->sameRing(*other)) throw Error(ErrorCode::PresentationMismatch, "elements live in different rings");
  return Element(other, terms_);
}

Element Element::operator-() const { return scaled(Coeff(-1)); }

namespace {

void requireSame(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorCode::PresentationMismatch, "operands live in different presentations");
}

Element merge(const Element& a, const Element& b, bool negate) {
  requireSame(a, b);
  const MonomialOrder& ord = a.algebra()->order();
  TermList out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin(), j = b.terms().begin();
  const auto ie = a.terms().end(), je = b.terms().end();
  while (i != ie || j != je) {
    int c = i == ie ? -1 : j == je ? 1 : ord.compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({negate ? -j->coeff : j->coeff, j->mono});
      ++j;
    } else {
      Coeff s = negate ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.isZero()) out.push_back({std::move(s), i->mono});
      ++i;
      ++j;
    }
  }
  return Element(a.algebra(), std::move(out));
}

}  // namespace

Element operator+(const Element& a, const Element& b) { return merge(a, b, false); }
Element operator-(const Element& a, const Element& b) { return merge(a, b, true); }
Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (a.terms_ != b.terms_) return false;
  return a.terms_.empty() || a.alg_ == b.alg_;
}

Element multiply(const Element& a, const Element& b) {
  requireSame(a, b);
  if (a.isZero() || b.isZero()) return Element(a.alg_);
  detail::Accumulator acc;
  const auto& table = a.alg_->table();
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) table.multiplyInto(ta.mono, tb.mono, ta.coeff * tb.coeff, acc);
  TermList out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.isZero()) out.push_back({std::move(c), m});
  return Element(a.alg_, std::move(out));
}

Element multiplyLeft(const Coeff& c, const Monomial& m, const Element& f) {
  if (f.isZero() || c.isZero()) return Element(f.algebra());
  detail::Accumulator acc;
  const auto& table = f.algebra()->table();
  for (const auto& t : f.terms()) table.multiplyInto(m, t.mono, c * t.coeff, acc);
  TermList out;
  out.reserve(acc.size());
  for (auto& [mm, cc] : acc)
    if (!cc.isZero()) out.push_back({std::move(cc), mm});
  return Element(f.algebra(), std::move(out));
}

Element toOpposite(const Element& a) {
  AlgebraPtr op = a.algebra()->opposite();
  const std::size_t n = op->nvars();
  TermList out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < n; ++v) m[n - 1 - v] = t.mono[v];
    out.push_back({t.coeff, m});
  }
  return Element(op, std::move(out));
}

}  // namespace ore
