#include "nullstrat/certificate.hpp"

namespace nullstrat {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

Certificate make_cert(std::string claim, std::string anchor, Json expected, Json computed,
                      std::uint64_t seed, const std::string& input_hash) {
  Certificate c;
  c.claim = std::move(claim);
  c.anchor = std::move(anchor);
  c.verdict = expected == computed ? Verdict::pass : Verdict::fail;
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  c.seed = seed;
  c.input_hash = input_hash;
  return c;
}

Certificate make_undetermined(std::string claim, std::string anchor, Json computed,
                              std::uint64_t seed, const std::string& input_hash) {
  Certificate c;
  c.claim = std::move(claim);
  c.anchor = std::move(anchor);
  c.expected = nullptr;
  c.computed = std::move(computed);
  c.verdict = Verdict::undetermined;
  c.seed = seed;
  c.input_hash = input_hash;
  return c;
}

int exit_code(const std::vector<Certificate>& certs) {
  bool any_fail = false, any_undet = false;
  for (const auto& c : certs) {
    any_fail |= c.verdict == Verdict::fail;
    any_undet |= c.verdict == Verdict::undetermined;
  }
  if (any_fail) return 1;
  if (any_undet) return 2;
  return 0;
}

Json cert_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["anchor"] = c.anchor;
  j["expected"] = c.expected;
  j["computed"] = c.computed;
  j["verdict"] = verdict_str(c.verdict);
  j["runtime_ms"] = c.runtime_ms;
  j["input_hash"] = c.input_hash;
  j["seed"] = c.seed;
  return j;
}

std::vector<Certificate> ledger_certs(const std::string& prefix, const std::string& anchor,
                                      const LedgerReport& rep, std::uint64_t seed,
                                      const std::string& input_hash) {
  std::vector<Certificate> out;
  for (const auto& e : rep.entries) {
    if (e.informational) continue;
    out.push_back(make_cert(prefix + "." + e.name, anchor, e.expected, e.computed, seed,
                            input_hash));
  }
  return out;
}

}  // namespace nullstrat
