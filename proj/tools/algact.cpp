#include <iostream>

#include "CLI11.hpp"
#include "algact/cli.hpp"

int main(int argc, char** argv) {
  using namespace algact::cli;
  CLI::App app{"Exact algebraic-action toolkit"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "standing assumptions, family, exactness, mixing, (F), (SF), identities");
  analyze->add_option("action", ao.input, "action JSON, or - for stdin")->required();
  analyze->add_option("--depth", ao.depth, "family depth")->check(CLI::Range(0, 12))->capture_default_str();
  analyze->add_option("--word-bound", ao.word_bound, "word length bound")->check(CLI::Range(1, 12))->capture_default_str();
  analyze->add_flag("--json", ao.json, "machine-readable output");

  CompareOptions co;
  auto* compare = app.add_subcommand("compare", "non-isomorphism test for two inputs");
  compare->add_option("first", co.first, "first input")->required();
  compare->add_option("second", co.second, "second input")->required();
  compare->add_option("--mode", co.mode, "toral, ring or poly")
      ->check(CLI::IsMember({"toral", "ring", "poly"}))
      ->capture_default_str();
  compare->add_option("--prime-bound", co.prime_bound, "largest prime tried in ring mode")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  compare->add_flag("--json", co.json, "machine-readable output");

  GroupoidOptions go;
  auto* groupoid = app.add_subcommand("groupoid", "level maps, translation orbit and identities at one level");
  groupoid->add_option("action", go.input, "action JSON, or - for stdin")->required();
  groupoid->add_option("--level", go.level, "lattice rows, e.g. \"4\" or \"2,0;0,3\"")->required();
  groupoid->add_option("--depth", go.depth, "family depth")->check(CLI::Range(0, 12))->capture_default_str();
  groupoid->add_option("--trace", go.trace, "write the arrows as JSON to this file");
  groupoid->add_flag("--json", go.json, "machine-readable output");

  PolyidealOptions po;
  auto* poly = app.add_subcommand("polyideal", "Groebner basis and conditions (a)-(d) for an ideal");
  poly->add_option("ideal", po.input, "ideal JSON, or - for stdin")->required();
  poly->add_flag("--json", po.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*analyze) return run_analyze(ao, std::cout, std::cerr);
  if (*compare) return run_compare(co, std::cout, std::cerr);
  if (*groupoid) return run_groupoid(go, std::cout, std::cerr);
  return run_polyideal(po, std::cout, std::cerr);
}
