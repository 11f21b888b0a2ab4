#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginshift/gin.hpp"
#include "ginshift/monomial_ideal.hpp"

namespace ginshift {

/// Outcome of one verification suite.
struct Report {
  std::string claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  /// Offending input and both sides of the failed comparison; null on
  /// success, except for counterexample claims, where it holds the evidence.
  nlohmann::ordered_json witness;
  /// Certified gins produced along the way, with their orders.
  std::vector<std::pair<MonomialIdeal, TermOrder>> gins;
  /// Notes that do not affect the verdict.
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
};

/// {"schema": 1, "claim_id", "params", "verdict", "witness"}.
nlohmann::ordered_json to_json(const Report& r);

/// Unset fields fall back to the per-claim defaults.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<unsigned> samples;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_m;
  std::optional<unsigned> max_deg;
  GinConfig gin;
  /// Worker threads for verify_all; 0 uses the hardware concurrency.
  unsigned jobs = 0;
};

struct Claim {
  std::string id;
  std::string summary;
  std::function<Report(const SuiteOptions&)> run;
};

/// Every claim suite, sorted by id. `gin-idempotence` is not listed here;
/// it runs over the gins collected by the others.
const std::vector<Claim>& claims();
const Claim* find_claim(const std::string& id);

/// Runs one suite; GinUncertain becomes a failing report carrying the seed.
Report run_claim(const Claim& c, const SuiteOptions& options);

/// gin(G) = G and strong stability for every collected gin.
Report verify_gin_idempotence(const std::vector<std::pair<MonomialIdeal, TermOrder>>& gins, const SuiteOptions& options);

/// All suites plus the idempotence check, reported in id order. Claims run
/// concurrently; the reports do not depend on scheduling. Never short-circuits.
std::vector<Report> verify_all(const SuiteOptions& options);

}  // namespace ginshift
