#pragma once

// Crossing-change certificates: a braid word for T(4,2n+1) together with n
// letter positions whose sign flip turns its closure into
// T(2,2n+1) # T(2,2n+1).

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusalt/braid.hpp"
#include "torusalt/invariants.hpp"

namespace torusalt {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_pass() const;
  // First failing check, or nullptr.
  const Check* first_failure() const;
};

struct DeformationCertificate {
  int n = 0;
  BraidWord word;
  std::set<std::size_t> positions;
  TorusKnot source;
  KnotSpec target;
  VerificationReport report;

  nlohmann::ordered_json to_json() const;
  // Reads word, positions and n; the report is left empty until verified.
  static DeformationCertificate from_json(const nlohmann::json& j);
};

// Limitation stated in every report: matching invariants do not by
// themselves prove that two knots are equal.
extern const char* const kInvariantCaveat;

// Builds and verifies the certificate for n >= 2; throws ConstructionFailed
// naming the first failed check.
DeformationCertificate build_deformation(int n);

// The construction word before any flips: sigma1^a sigma3^b (s2 s1 s3 s2)^n
// s1 s2 s3 with the twist split (a, b) depending on the parity of n.
BraidWord deformation_word(int n);
std::set<std::size_t> deformation_flips(int n);

VerificationReport verify_certificate(const DeformationCertificate& c);

}  // namespace torusalt
