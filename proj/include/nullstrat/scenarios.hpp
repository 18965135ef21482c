#ifndef NULLSTRAT_SCENARIOS_HPP
#define NULLSTRAT_SCENARIOS_HPP

#include <string>
#include <vector>

#include "nullstrat/certificate.hpp"
#include "nullstrat/repchar.hpp"

namespace nullstrat {

struct ScenarioParams {
  std::uint64_t seed = 20260809;
  std::uint64_t prime = 10007;
  long max_degree = 8;
  std::string group = "SL3";
  std::string module = "0,4-dual";
};

struct ScenarioResult {
  std::string name;
  ScenarioParams params;
  std::vector<Certificate> certificates;
  Json report;  // scenario-specific data beyond the certificates
};

// registered scenario names, stable order
std::vector<std::string> list_scenarios();

// deterministic given the seed; throws on unknown names
ScenarioResult run_scenario(const std::string& name, const ScenarioParams& params);

// full JSON document, schema versioned
Json result_json(const ScenarioResult& r);

// module-label syntax: "a,b" for labels, "sym:d" / "ext:k" powers of the
// standard module, "-dual" suffix; product groups separate factors with 'x'
CharacterMultiset parse_module(const GroupShape& shape, const std::string& text);

}  // namespace nullstrat

#endif
