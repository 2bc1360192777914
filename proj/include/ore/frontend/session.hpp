#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ore/fraction.hpp"

namespace ore {

struct Record {
  std::size_t index = 0;
  std::string label;  // op or name for results; error code for diagnostics
  std::string value;
  bool error = false;
  bool internal = false;
};

struct SessionOptions {
  unsigned bound = kDefaultMonoidalBound;
  std::optional<OrderKind> order;
  /// Parse and resolve names only; operations are not evaluated.
  bool dryRun = false;
};

/// Line-oriented command interpreter; one command per line, '#' comments.
class Session {
 public:
  explicit Session(SessionOptions options = {}) : options_(options) {}

  /// Executes one line. Blank and comment lines produce nothing and do not
  /// advance the command index.
  std::vector<Record> execute(std::string_view line);

  std::size_t commandCount() const { return index_; }
  bool hadErrors() const { return errors_; }
  bool hadInternalErrors() const { return internal_; }

 private:
  struct Pending {};
  using Value = std::variant<Element, Fraction, GroebnerBasis, std::string, Pending>;
  struct Alg {
    AlgebraPtr ptr;
    std::optional<std::string> oreSet;
  };

  void defineAlgebra(std::string_view rest);
  void defineOreSet(std::string_view rest);
  Value evaluateRhs(std::string_view text);
  Value call(const std::string& op, const std::vector<std::string>& args);
  std::string render(const Value& v) const;

  const AlgebraPtr& current() const;
  OreSetPtr currentOreSet() const;
  OreSetPtr oreSetArg(const std::vector<std::string>& args, std::size_t pos, std::size_t& used) const;
  Element element(std::string_view text) const;
  Fraction fraction(std::string_view text, const OreSetPtr& S) const;
  std::vector<std::size_t> variableList(std::string_view text) const;
  const Value* lookup(std::string_view name) const;

  SessionOptions options_;
  std::size_t index_ = 0;
  bool errors_ = false, internal_ = false;
  std::map<std::string, Alg, std::less<>> algebras_;
  std::optional<std::string> currentAlg_;
  std::map<std::string, OreSetPtr, std::less<>> oreSets_;
  std::map<std::string, Value, std::less<>> values_;
};

std::string renderPlain(const Record& r);
/// One JSON object per record.
std::string renderJson(const Record& r);

}  // namespace ore
