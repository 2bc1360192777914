#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ore/frontend/session.hpp"

namespace {

struct Flags {
  unsigned bound = ore::kDefaultMonoidalBound;
  std::string order;
  std::string format = "plain";
};

ore::SessionOptions sessionOptions(const Flags& f, bool dryRun) {
  ore::SessionOptions o;
  o.bound = f.bound;
  if (!f.order.empty()) o.order = ore::parseOrderKind(f.order);
  o.dryRun = dryRun;
  return o;
}

void emit(const std::vector<ore::Record>& records, const Flags& f) {
  for (const auto& r : records) {
    std::string text = f.format == "json" ? ore::renderJson(r) : ore::renderPlain(r);
    (r.error ? std::cerr : std::cout) << text << '\n';
  }
}

int exitCode(const ore::Session& s) {
  if (s.hadInternalErrors()) return 2;
  return s.hadErrors() ? 1 : 0;
}

int runStream(std::istream& in, const Flags& f, bool dryRun, bool prompt) {
  ore::Session session(sessionOptions(f, dryRun));
  std::string line;
  for (;;) {
    if (prompt) std::cout << "ore> " << std::flush;
    if (!std::getline(in, line)) break;
    emit(session.execute(line), f);
  }
  if (prompt) std::cout << '\n';
  if (dryRun && !session.hadErrors()) std::cout << "ok\n";
  return exitCode(session);
}

int runFile(const std::string& path, const Flags& f, bool dryRun) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 1;
  }
  return runStream(in, f, dryRun, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ore localization of G-algebras"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--bound", flags.bound, "exponent bound for monoidal intersections");
  app.add_option("--order", flags.order, "default monomial order (dp, Dp, lp)")
      ->check(CLI::IsMember({"dp", "Dp", "lp", "degrevlex", "deglex", "lex"}));
  app.add_option("--format", flags.format, "output format")->check(CLI::IsMember({"plain", "json"}));

  std::string script;
  auto* run = app.add_subcommand("run", "execute a script");
  run->add_option("script", script)->required();
  auto* check = app.add_subcommand("check", "parse and resolve a script without evaluating");
  check->add_option("script", script)->required();
  auto* repl = app.add_subcommand("repl", "interactive session");
  for (auto* sub : {run, check, repl}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return runFile(script, flags, false);
    if (*check) return runFile(script, flags, true);
    if (*repl) return runStream(std::cin, flags, false, isatty(STDIN_FILENO) != 0);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
