#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace torusalt::cli {

struct ClaimResult {
  std::string key;    // sort key, e.g. "2/upsilon/T(3,7)"
  std::string claim;  // the statement being checked
  bool pass = false;
  std::string detail;
};

// Every check of the batch run, sorted by key.
std::vector<ClaimResult> run_claim_checks(int max_n);

nlohmann::ordered_json to_json(const std::vector<ClaimResult>& results);

}  // namespace torusalt::cli
