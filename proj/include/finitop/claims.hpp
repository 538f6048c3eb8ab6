#pragma once

#include <string>
#include <vector>

namespace finitop {

struct ClaimLine {
  std::string what;
  bool expected = false;
  bool computed = false;
  bool oracle_ok = true;  // engine result matched the window model at every window
  bool ok() const { return computed == expected && oracle_ok; }
};

struct ClaimReport {
  std::string name;
  std::vector<ClaimLine> lines;
  bool pass = false;
};

/// Names of the verifiable symbolic claims:
///   staircase_closedness      closedness of the staircase in X x upper-bar
///   retract_not_closed        closed staircase whose projection is not closed
///   staircase_lid_inseparable smallest open superset and failed separation
///   lower_omega_witnesses     vacuous normality and the empty closed chain
std::vector<std::string> claim_names();

/// Runs one claim, cross-validating every symbolic verdict against the
/// window model at each of the given windows. Throws UnknownSuite for an
/// unknown name.
ClaimReport run_claim(const std::string& name, const std::vector<int>& windows);

}  // namespace finitop
