#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdindex/json_io.hpp"
#include "cdindex/permutation.hpp"
#include "cdindex/reflection_order.hpp"

namespace cdindex {

/// One JSON-lines record of an exhaustive sweep, for a single interval.
struct ScanRecord {
  std::string key;  // "<order>/<u>/<v>"
  json data;
  int violations = 0;
  bool flip_undefined = false;
};

std::string scan_key(const Permutation& u, const Permutation& v, const ReflectionOrder& order);

/// All u < v in S_n with l(v) - l(u) <= max_length, ordered by (l(v) - l(u), u, v).
std::vector<std::pair<Permutation, Permutation>> scan_intervals(int n, int max_length);

/// Runs every check on [u, v]: coefficient identities, flip and strong flip
/// conditions, and the shelling decomposition for every reflection t.
ScanRecord scan_interval(const Permutation& u, const Permutation& v, const ReflectionOrder& order,
                         bool timing = false);

struct ScanOptions {
  int n = 4;
  int max_length = -1;  // -1: no bound
  std::string order = "lex";
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;
};

struct ScanSummary {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::size_t flip_undefined = 0;
};

/// Writes one line per interval whose key is not in `skip`, in scan_intervals
/// order regardless of the number of worker threads.
ScanSummary run_scan(const ScanOptions& options, std::ostream& out, const std::set<std::string>& skip = {});

}  // namespace cdindex
