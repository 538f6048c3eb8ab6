#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finitop/fin_space.hpp"

namespace finitop {

inline constexpr int kMaxEnumPoints = 8;

/// Streams every preorder (topology) on n labeled points exactly once, by
/// incremental row extension with transitivity pruning. With t0_only, only
/// posets; with up_to_iso, canonical representatives only.
class EnumerationStream {
public:
  EnumerationStream(int n, bool t0_only, bool up_to_iso, int max_n = kMaxEnumPoints);
  std::optional<FinSpace> next();

private:
  bool row_ok(uint32_t mask) const;
  FinSpace build() const;

  int n_;
  bool t0_, iso_, done_ = false;
  int depth_ = 0;
  std::vector<uint32_t> rows_;
  std::vector<uint32_t> cand_;
  std::set<std::vector<uint64_t>> seen_;
};

uint64_t count_spaces(int n, bool t0_only, bool up_to_iso);

std::vector<FinSpace> all_spaces_labeled(int n, bool t0_only = false);
std::vector<FinSpace> all_spaces_up_to_iso(int n, bool t0_only = false);

/// Canonical representatives of every space with 1..max_n points, sorted by
/// (size, canonical encoding). The deterministic ground order for searches.
std::vector<FinSpace> space_catalog(int max_n, bool t0_only = false);

struct SearchOutcome {
  std::string query;
  bool found = false;  // verdict: counterexample(witness) vs exhausted_none
  std::map<std::string, FinSpace> witness;
  uint64_t visited = 0;
  uint64_t elapsed_ms = 0;
};

/// First assignment (smallest total size, then lexicographic by size tuple
/// and canonical encodings) satisfying the query; exhausted_none otherwise.
/// Workers partition on the first variable; the least witness wins, so the
/// parallel outcome equals the serial one.
SearchOutcome find_counterexample(const std::string& query,
                                  const std::map<std::string, int>& bounds, int workers = 1,
                                  int max_points = 4096);

struct SuiteReport {
  std::string id;
  bool pass = false;
  uint64_t checked = 0;
  std::vector<std::string> failures;  // first few, human-readable
  uint64_t elapsed_ms = 0;
};

/// Named exhaustive theorem checks over the enumeration. Throws UnknownSuite.
SuiteReport run_suite(const std::string& suite_id, int max_n);

std::vector<std::string> suite_ids();

}  // namespace finitop
