#ifndef NULLSTRAT_CERTIFICATE_HPP
#define NULLSTRAT_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nullstrat/methods.hpp"

namespace nullstrat {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, undetermined };

std::string verdict_str(Verdict v);

// A named exact claim: anchor tag, expected and computed values, verdict.
// Values are exact (integers, rational strings, arrays); pass means
// expected == computed as JSON values.
struct Certificate {
  std::string claim;
  std::string anchor;
  Json expected;
  Json computed;
  Verdict verdict = Verdict::undetermined;
  long runtime_ms = 0;
  std::string input_hash;
  std::uint64_t seed = 0;
};

Certificate make_cert(std::string claim, std::string anchor, Json expected, Json computed,
                      std::uint64_t seed, const std::string& input_hash);
// an undetermined claim (searched, not decided)
Certificate make_undetermined(std::string claim, std::string anchor, Json computed,
                              std::uint64_t seed, const std::string& input_hash);

// exit code contract: 0 all pass, 1 any fail, 2 undetermined without fails
int exit_code(const std::vector<Certificate>& certs);

Json cert_json(const Certificate& c);

// certificates from a methods ledger
std::vector<Certificate> ledger_certs(const std::string& prefix, const std::string& anchor,
                                      const LedgerReport& rep, std::uint64_t seed,
                                      const std::string& input_hash);

}  // namespace nullstrat

#endif
