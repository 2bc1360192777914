#include "ore/frontend/session.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"
#include "ore/frontend/format.hpp"
#include "ore/frontend/parser.hpp"

namespace ore {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool isIdentifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Splits at separators outside brackets and quotes.
std::vector<std::string> splitTopLevel(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  bool quoted = false;
  std::string cur;
  for (char c : text) {
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (depth < 0) throw Error(ErrorCode::ParseError, "unbalanced brackets");
      if (depth == 0 && (sep == ' ' ? std::isspace(static_cast<unsigned char>(c)) != 0 : c == sep)) {
        out.emplace_back(trim(cur));
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  if (depth != 0 || quoted) throw Error(ErrorCode::ParseError, "unbalanced brackets or quotes");
  out.emplace_back(trim(cur));
  if (sep == ' ') out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
  return out;
}

std::string unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return std::string(s.substr(1, s.size() - 2));
  return std::string(s);
}

const std::set<std::string, std::less<>>& knownOps() {
  static const std::set<std::string, std::less<>> ops = {
      "add", "mul", "eq", "invertible", "invert", "convertLR", "convertRL", "cancel", "ore", "rightOre",
      "disprove", "isInS", "kernel", "gb", "nf", "eliminate", "syz", "rsyz", "rdiv", "lift", "mint"};
  return ops;
}

/// "op(args)" spanning the whole text.
std::optional<std::pair<std::string, std::vector<std::string>>> parseCall(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') return std::nullopt;
  std::string_view op = trim(text.substr(0, open));
  if (!knownOps().count(op)) return std::nullopt;
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0 && i + 1 != text.size()) return std::nullopt;
  }
  std::string_view inner = trim(text.substr(open + 1, text.size() - open - 2));
  std::vector<std::string> args;
  if (!inner.empty()) args = splitTopLevel(inner, ',');
  return std::make_pair(std::string(op), std::move(args));
}

std::string boolText(bool b) { return b ? "true" : "false"; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Record> Session::execute(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return {};
  const std::size_t idx = ++index_;
  std::vector<Record> out;
  auto fail = [&](std::string code, std::string msg, bool internal) {
    errors_ = true;
    internal_ = internal_ || internal;
    out.push_back({idx, std::move(code), std::move(msg), true, internal});
  };
  try {
    auto space = line.find_first_of(" \t");
    std::string_view head = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (head == "algebra") {
      defineAlgebra(rest);
    } else if (head == "oreset") {
      defineOreSet(rest);
    } else if (head == "use") {
      std::string name(rest);
      if (auto a = algebras_.find(name); a != algebras_.end()) {
        currentAlg_ = name;
      } else if (auto s = oreSets_.find(name); s != oreSets_.end()) {
        for (auto& [algName, alg] : algebras_)
          if (alg.ptr == s->second->algebra()) {
            currentAlg_ = algName;
            alg.oreSet = name;
          }
      } else {
        throw Error(ErrorCode::UndefinedName, "no algebra or Ore set named '" + name + "'");
      }
    } else if (head == "let") {
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'let NAME = ...'");
      std::string name(trim(rest.substr(0, eq)));
      if (!isIdentifier(name)) throw Error(ErrorCode::ParseError, "invalid name '" + name + "'");
      if (algebras_.count(name) || oreSets_.count(name))
        throw Error(ErrorCode::InvalidArgument, "'" + name + "' already names an algebra or Ore set");
      if (currentAlg_ && (current()->varIndex(name) || current()->paramIndex(name)))
        throw Error(ErrorCode::InvalidArgument, "'" + name + "' is a variable or parameter");
      Value v = evaluateRhs(trim(rest.substr(eq + 1)));
      values_.insert_or_assign(name, std::move(v));
    } else if (head == "print") {
      std::string target(rest);
      if (isIdentifier(target) && !lookup(target) && !oreSets_.count(target) &&
          !(currentAlg_ && (current()->varIndex(target) || current()->paramIndex(target))))
        throw Error(ErrorCode::UndefinedName, "undefined name '" + target + "'");
      Value v = Pending{};
      if (auto s = oreSets_.find(target); s != oreSets_.end()) {
        const OreSet& S = *s->second;
        std::string text = std::string(oreKindName(S.kind())) + " ";
        if (S.kind() == OreKind::Rational) {
          text += "{";
          for (std::size_t i = 0; i < S.block().size(); ++i)
            text += (i ? ", " : "") + S.algebra()->vars()[S.block()[i]];
          text += "}";
        } else {
          text += "[";
          for (std::size_t i = 0; i < S.generators().size(); ++i)
            text += (i ? ", " : "") + formatElement(S.generators()[i]);
          text += "]";
        }
        if (S.kind() == OreKind::Monoidal) text += " g=" + formatElement(S.radicalGenerator());
        if (S.kind() == OreKind::Geometric) text += S.verified() ? " prime-assumed" : " prime-assumed unverified";
        v = text;
      } else {
        v = lookup(target) ? *lookup(target) : evaluateRhs(rest);
      }
      if (!options_.dryRun) out.push_back({idx, target, render(v)});
    } else {
      auto callText = trim(line);
      auto c = parseCall(callText);
      if (!c) throw Error(ErrorCode::ParseError, "unknown command '" + std::string(head) + "'");
      Value v = call(c->first, c->second);
      if (!options_.dryRun) out.push_back({idx, c->first, render(v)});
    }
  } catch (const ParseError& e) {
    fail("ParseError", e.what(), false);
  } catch (const Error& e) {
    fail(std::string(errorCodeName(e.code())), e.what(), e.code() == ErrorCode::Internal);
  } catch (const std::exception& e) {
    fail("Internal", e.what(), true);
  }
  return out;
}

const AlgebraPtr& Session::current() const {
  if (!currentAlg_) throw Error(ErrorCode::UndefinedName, "no algebra selected");
  return algebras_.find(*currentAlg_)->second.ptr;
}

OreSetPtr Session::currentOreSet() const {
  if (!currentAlg_) throw Error(ErrorCode::UndefinedName, "no algebra selected");
  const auto& alg = algebras_.find(*currentAlg_)->second;
  if (!alg.oreSet) throw Error(ErrorCode::UndefinedName, "no Ore set defined for the current algebra");
  return oreSets_.find(*alg.oreSet)->second;
}

const Session::Value* Session::lookup(std::string_view name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

Element Session::element(std::string_view text) const {
  const AlgebraPtr& alg = current();
  NameLookup names = [this, &alg](std::string_view n) -> std::optional<Element> {
    const Value* v = lookup(n);
    if (!v) return std::nullopt;
    if (auto e = std::get_if<Element>(v)) return *e;
    if (std::holds_alternative<Pending>(*v)) return Element(alg);
    return std::nullopt;
  };
  return parseElement(text, alg, names);
}

std::vector<std::size_t> Session::variableList(std::string_view text) const {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (const auto& name : splitTopLevel(text, ',')) {
    auto v = current()->varIndex(name);
    if (!v) throw Error(ErrorCode::UndefinedName, "unknown variable '" + name + "'");
    out.push_back(*v);
  }
  return out;
}

Fraction Session::fraction(std::string_view text, const OreSetPtr& S) const {
  text = trim(text);
  if (const Value* v = lookup(text)) {
    if (auto f = std::get_if<Fraction>(v)) return *f;
    throw Error(ErrorCode::InvalidArgument, "'" + std::string(text) + "' is not a fraction");
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(ErrorCode::ParseError, "expected a fraction [s, r, p, t]");
  auto parts = splitTopLevel(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 4) throw Error(ErrorCode::ParseError, "a fraction literal has four entries");
  auto opt = [&](const std::string& p) -> std::optional<Element> {
    if (p == "_") return std::nullopt;
    return element(p);
  };
  auto s = opt(parts[0]), r = opt(parts[1]), p = opt(parts[2]), t = opt(parts[3]);
  if (s.has_value() != r.has_value() || p.has_value() != t.has_value())
    throw Error(ErrorCode::ParseError, "fraction pairs must be given completely or as '_, _'");
  if (s && p) return Fraction::fromBoth(S, {*s, *r}, {*p, *t});
  if (s) return Fraction::fromLeft(S, *s, *r);
  if (p) return Fraction::fromRight(S, *p, *t);
  throw Error(ErrorCode::ParseError, "a fraction needs a left or a right pair");
}

OreSetPtr Session::oreSetArg(const std::vector<std::string>& args, std::size_t pos, std::size_t& used) const {
  used = args.size();
  if (args.size() > pos) {
    auto it = oreSets_.find(args[pos]);
    if (it == oreSets_.end()) throw Error(ErrorCode::UndefinedName, "unknown Ore set '" + args[pos] + "'");
    if (it->second->algebra() != current())
      throw Error(ErrorCode::PresentationMismatch, "Ore set '" + args[pos] + "' belongs to another algebra");
    return it->second;
  }
  return currentOreSet();
}

Session::Value Session::evaluateRhs(std::string_view text) {
  text = trim(text);
  if (auto c = parseCall(text)) return call(c->first, c->second);
  if (!text.empty() && text.front() == '[') {
    auto close = text.rfind(']');
    OreSetPtr S;
    std::string_view tail = trim(text.substr(close + 1));
    if (tail.empty()) {
      S = currentOreSet();
    } else {
      if (tail.substr(0, 3) != "in ") throw Error(ErrorCode::ParseError, "expected 'in NAME' after a fraction literal");
      std::string name(trim(tail.substr(3)));
      auto it = oreSets_.find(name);
      if (it == oreSets_.end()) throw Error(ErrorCode::UndefinedName, "unknown Ore set '" + name + "'");
      S = it->second;
    }
    if (S->algebra() != current())
      throw Error(ErrorCode::PresentationMismatch, "the Ore set belongs to another algebra");
    return fraction(text.substr(0, close + 1), S);
  }
  if (const Value* v = lookup(text)) return *v;
  return element(text);
}

Session::Value Session::call(const std::string& op, const std::vector<std::string>& args) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw Error(ErrorCode::InvalidArgument, op + " expects " + std::to_string(lo) +
                                                  (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments");
  };
  auto elems = [&](std::size_t from) {
    std::vector<Element> out;
    for (std::size_t i = from; i < args.size(); ++i) {
      Value v;
      if (auto c = parseCall(args[i]))
        v = call(c->first, c->second);
      else if (const Value* named = lookup(args[i]))
        v = *named;
      else
        v = element(args[i]);
      if (auto g = std::get_if<GroebnerBasis>(&v)) {
        if (g->rank() != 1) throw Error(ErrorCode::InvalidArgument, "expected an ideal, got a module");
        for (auto& e : g->elements()) out.push_back(e);
      } else if (auto e = std::get_if<Element>(&v)) {
        out.push_back(*e);
      } else {
        throw Error(ErrorCode::InvalidArgument, "'" + args[i] + "' is not an element or ideal");
      }
    }
    return out;
  };
  if (options_.dryRun) {
    for (const auto& a : args) {
      if (lookup(a) || oreSets_.count(a)) continue;
      if (auto c = parseCall(a)) {
        call(c->first, c->second);
        continue;
      }
      if (!a.empty() && a.front() == '[') {
        fraction(a, currentOreSet());
      } else if (!a.empty() && a.front() == '{') {
        variableList(a);
      } else {
        element(a);
      }
    }
    return Pending{};
  }
  std::size_t used = 0;
  if (op == "add" || op == "mul" || op == "eq") {
    arity(2, 2);
    OreSetPtr S = currentOreSet();
    Fraction a = fraction(args[0], S), b = fraction(args[1], a.oreSet());
    if (op == "add") return addFractions(a, b);
    if (op == "mul") return mulFractions(a, b);
    return boolText(areEqual(a, b));
  }
  if (op == "invertible" || op == "invert" || op == "convertLR" || op == "convertRL" || op == "cancel") {
    arity(1, 1);
    Fraction a = fraction(args[0], currentOreSet());
    if (op == "invert") return invertFraction(a);
    if (op == "convertLR") return convertLeftToRight(a);
    if (op == "convertRL") return convertRightToLeft(a);
    if (op == "invertible") {
      auto res = isInvertible(a);
      std::string text(invertibilityName(res.status));
      if (res.status == Invertibility::Yes) text += " w=" + formatElement(*res.w) + " b=" + formatElement(*res.b);
      return text;
    }
    auto res = cancelSyzygy(a);
    std::string text = "{";
    for (std::size_t i = 0; i < res.representations.size(); ++i)
      text += (i ? ", " : "") + formatFraction(res.representations[i]);
    return text + "} best=" + formatFraction(res.representations[res.best]);
  }
  if (op == "ore" || op == "rightOre" || op == "disprove") {
    arity(2, 3);
    OreSetPtr S = oreSetArg(args, 2, used);
    Element s = element(args[0]), r = element(args[1]);
    if (op == "ore") {
      auto w = leftOre(s, r, *S);
      std::string text = "s~=" + formatElement(w.sTilde) + " r~=" + formatElement(w.rTilde);
      if (w.exponent) text += " m=" + std::to_string(*w.exponent);
      return text + " J=" + formatBasis(w.candidates);
    }
    if (op == "rightOre") {
      auto w = rightOre(s, r, *S);
      std::string text = "t=" + formatElement(w.sTilde) + " p=" + formatElement(w.rTilde);
      if (w.exponent) text += " m=" + std::to_string(*w.exponent);
      return text;
    }
    auto res = disproveOrePair(s, r, *S);
    std::string text(oreStatusName(res.status));
    if (res.witness) text += " s~=" + formatElement(res.witness->sTilde) + " r~=" + formatElement(res.witness->rTilde);
    text += " J=" + formatBasis(res.kernel);
    if (res.certificate) text += " certificate=" + formatBasis(*res.certificate);
    return text;
  }
  if (op == "isInS") {
    arity(1, 2);
    OreSetPtr S = oreSetArg(args, 1, used);
    return boolText(isInS(element(args[0]), *S));
  }
  if (op == "kernel") {
    arity(2, 2);
    return kernelPhi(element(args[0]), element(args[1]));
  }
  if (op == "gb") {
    arity(1, 64);
    return leftGB(elems(0), current());
  }
  if (op == "nf") {
    arity(2, 64);
    return leftNF(element(args[0]), leftGB(elems(1), current()));
  }
  if (op == "eliminate") {
    arity(2, 64);
    return eliminate(elems(1), variableList(args[0]));
  }
  if (op == "syz") {
    arity(1, 64);
    return leftSyzygies(elems(0));
  }
  if (op == "rsyz") {
    arity(1, 64);
    auto gens = rightSyzygies(elems(0));
    std::string text = "{";
    for (std::size_t i = 0; i < gens.size(); ++i) text += (i ? ", " : "") + formatVector(gens[i]);
    return text + "}";
  }
  if (op == "rdiv") {
    arity(2, 2);
    return rightDivideExact(element(args[0]), element(args[1]));
  }
  if (op == "lift") {
    arity(2, 2);
    return liftWitness(element(args[0]), element(args[1]));
  }
  if (op == "mint") {
    arity(2, 64);
    return std::to_string(monoidalIntersection(leftGB(elems(1), current()), element(args[0]), options_.bound));
  }
  throw Error(ErrorCode::ParseError, "unknown operation '" + op + "'");
}

std::string Session::render(const Value& v) const {
  if (auto e = std::get_if<Element>(&v)) return formatElement(*e);
  if (auto f = std::get_if<Fraction>(&v)) return formatFraction(*f);
  if (auto g = std::get_if<GroebnerBasis>(&v)) return formatBasis(*g);
  if (auto s = std::get_if<std::string>(&v)) return *s;
  return "<pending>";
}

// ---------------------------------------------------------------------------
// Definitions

void Session::defineAlgebra(std::string_view rest) {
  auto tokens = splitTopLevel(rest, ' ');
  if (tokens.empty() || !isIdentifier(tokens[0])) throw Error(ErrorCode::ParseError, "expected 'algebra NAME key=value ...'");
  std::string name = tokens[0];
  GAlgebraSpec spec;
  std::vector<std::string> rels, weyl;
  std::optional<OrderKind> order = options_.order;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto eq = tokens[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + tokens[i] + "'");
    std::string key = tokens[i].substr(0, eq), value = unquote(tokens[i].substr(eq + 1));
    auto list = [&] {
      std::vector<std::string> out;
      for (auto& s : splitTopLevel(value, ','))
        if (!s.empty()) out.push_back(s);
      return out;
    };
    if (key == "vars") {
      spec.vars = list();
    } else if (key == "params") {
      spec.params = list();
    } else if (key == "order") {
      try {
        order = parseOrderKind(value);
      } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::InvalidArgument, e.what());
      }
    } else if (key == "weyl") {
      weyl = list();
    } else if (key == "rel") {
      rels.push_back(value);
    } else {
      throw Error(ErrorCode::ParseError, "unknown algebra option '" + key + "'");
    }
  }
  for (const auto& v : spec.vars)
    if (!isIdentifier(v)) throw Error(ErrorCode::InvalidPresentation, "invalid variable name '" + v + "'");
  for (const auto& p : spec.params)
    if (!isIdentifier(p)) throw Error(ErrorCode::InvalidPresentation, "invalid parameter name '" + p + "'");
  if (order) spec.order = MonomialOrder::plain(*order, spec.vars.size());
  auto index = [&](const std::string& v) {
    auto it = std::find(spec.vars.begin(), spec.vars.end(), v);
    if (it == spec.vars.end()) throw Error(ErrorCode::UndefinedName, "unknown variable '" + v + "'");
    return static_cast<std::size_t>(it - spec.vars.begin());
  };
  for (const auto& w : weyl) {
    auto colon = w.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "Weyl pairs are written x:dx");
    spec.weylPairs.emplace_back(index(w.substr(0, colon)), index(w.substr(colon + 1)));
  }
  if (!rels.empty()) {
    GAlgebraSpec comm;
    comm.vars = spec.vars;
    comm.params = spec.params;
    comm.order = spec.order;
    AlgebraPtr K = GAlgebra::create(comm);
    for (const auto& rel : rels) {
      auto eq = rel.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "relation needs '='");
      auto lhs = splitTopLevel(trim(std::string_view(rel).substr(0, eq)), '*');
      if (lhs.size() != 2)
        throw Error(ErrorCode::InvalidPresentation, "relation left side must be a product xj*xi of two variables");
      std::size_t j = index(lhs[0]), i = index(lhs[1]);
      if (j <= i)
        throw Error(ErrorCode::InvalidPresentation, "relation left side must list the later variable first");
      Element rhs = parseElement(std::string_view(rel).substr(eq + 1), K);
      Monomial xixj = Monomial::variable(i) + Monomial::variable(j);
      RelationSpec r{i, j, Coeff(0), {}};
      for (const auto& t : rhs.terms()) {
        if (t.mono == xixj)
          r.c = t.coeff;
        else
          r.d.push_back(t);
      }
      spec.relations.push_back(std::move(r));
    }
  }
  AlgebraPtr alg = GAlgebra::create(spec);
  algebras_.insert_or_assign(name, Alg{alg, std::nullopt});
  currentAlg_ = name;
}

void Session::defineOreSet(std::string_view rest) {
  auto space = rest.find_first_of(" \t");
  if (space == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected 'oreset NAME KIND ...'");
  std::string name(rest.substr(0, space));
  if (!isIdentifier(name)) throw Error(ErrorCode::ParseError, "invalid Ore set name '" + name + "'");
  rest = trim(rest.substr(space));
  space = rest.find_first_of(" \t");
  std::string kind(rest.substr(0, space));
  std::string_view body = space == std::string_view::npos ? std::string_view{} : trim(rest.substr(space));

  // Trailing options: bound=N, block=a,b, unverified.
  unsigned bound = options_.bound;
  std::optional<std::string> block;
  bool unverified = false;
  for (;;) {
    auto cut = body.find_last_of(" \t");
    std::string_view last = cut == std::string_view::npos ? body : body.substr(cut + 1);
    if (last == "unverified") {
      unverified = true;
    } else if (last.substr(0, 6) == "bound=") {
      bound = static_cast<unsigned>(std::stoul(std::string(last.substr(6))));
    } else if (last.substr(0, 6) == "block=") {
      block = std::string(last.substr(6));
    } else {
      break;
    }
    body = cut == std::string_view::npos ? std::string_view{} : trim(body.substr(0, cut));
  }
  const AlgebraPtr& alg = current();
  std::vector<std::string> items;
  if (!body.empty()) items = splitTopLevel(body, ',');
  OreSetPtr S;
  if (kind == "monoidal") {
    std::vector<Element> gens;
    for (const auto& it : items) gens.push_back(element(it));
    S = OreSet::monoidal(alg, std::move(gens), bound);
  } else if (kind == "geometric") {
    std::vector<Element> gens;
    for (const auto& it : items) gens.push_back(element(it));
    std::optional<std::vector<std::size_t>> blk;
    if (block) blk = variableList(*block);
    S = OreSet::geometric(alg, std::move(gens), blk, unverified);
  } else if (kind == "rational") {
    S = OreSet::rational(alg, variableList(body));
  } else {
    throw Error(ErrorCode::ParseError, "Ore set kind must be monoidal, geometric or rational");
  }
  oreSets_.insert_or_assign(name, S);
  algebras_.find(*currentAlg_)->second.oreSet = name;
}

// ---------------------------------------------------------------------------

std::string renderPlain(const Record& r) {
  if (r.error) return "error[" + std::to_string(r.index) + "] " + r.label + ": " + r.value;
  return "[" + std::to_string(r.index) + "] " + r.label + ": " + r.value;
}

std::string renderJson(const Record& r) {
  nlohmann::ordered_json j;
  j["index"] = r.index;
  if (r.error) {
    j["error"] = r.label;
    j["message"] = r.value;
  } else {
    j["label"] = r.label;
    j["value"] = r.value;
  }
  return j.dump();
}

}  // namespace ore
