// Scenario runner: executes named verification suites and emits
// deterministic certificates. Exit code: 0 all pass, 1 any fail,
// 2 undetermined results without failures.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nullstrat/scenarios.hpp"

using namespace nullstrat;

namespace {

void print_human(const ScenarioResult& res) {
  std::cout << "scenario " << res.name << " (seed " << res.params.seed << ")\n";
  for (const auto& c : res.certificates) {
    std::cout << "  [" << verdict_str(c.verdict) << "] " << c.claim << " [" << c.anchor << "]";
    if (c.verdict == Verdict::fail) {
      std::cout << "  expected " << c.expected.dump() << ", computed " << c.computed.dump();
    }
    std::cout << "\n";
  }
  int pass = 0, fail = 0, undet = 0;
  for (const auto& c : res.certificates) {
    if (c.verdict == Verdict::pass) ++pass;
    if (c.verdict == Verdict::fail) ++fail;
    if (c.verdict == Verdict::undetermined) ++undet;
  }
  std::cout << "  " << pass << " pass, " << fail << " fail, " << undet << " undetermined\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nullstrat: exact certificates for instability, strata and rationality ledgers"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a named scenario");
  std::string scenario;
  ScenarioParams params;
  std::string json_path;
  run->add_option("scenario", scenario, "scenario name (see `nullstrat list`)")->required();
  run->add_option("--seed", params.seed, "random seed (recorded in every certificate)");
  run->add_option("--prime", params.prime, "prime for mod-p computations");
  run->add_option("--max-degree", params.max_degree, "invariant search bound for strata");
  run->add_option("--group", params.group, "group shape, e.g. SL3 or 'SL5 x SL3'");
  run->add_option("--module", params.module,
                  "module label: 'a,b', 'sym:d', 'ext:k', '-dual' suffix, 'x' between factors");
  run->add_option("--json", json_path, "write the certificate document to this file ('-' = stdout)");

  auto* list = app.add_subcommand("list", "list registered scenarios");
  bool list_json = false;
  list->add_flag("--json", list_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    if (list_json) {
      Json j = Json::array();
      for (const auto& s : list_scenarios()) j.push_back(s);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& s : list_scenarios()) std::cout << s << "\n";
    }
    return 0;
  }

  try {
    ScenarioResult res = run_scenario(scenario, params);
    print_human(res);
    if (!json_path.empty()) {
      Json doc = result_json(res);
      if (json_path == "-") {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream out(json_path);
        if (!out) {
          std::cerr << "error: cannot write " << json_path << "\n";
          return 3;
        }
        out << doc.dump(2) << "\n";
      }
    }
    return exit_code(res.certificates);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
