#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

struct EnumerationOptions {
  int jobs = 1;
  bool force = false;  // ignore the order guard
};

/// Largest order enumerated without force: 12, or QMAIN_GUARD_N if set.
int enumeration_guard();

/// One representative per isomorphism class of connected graphs with n
/// vertices, for each edge count from n-1 up to max_m. levels[i] holds the
/// graphs with n-1+i edges, canonically labeled and sorted by key.
std::vector<std::vector<Graph>> enumerate_connected_levels(int n, int max_m, const EnumerationOptions& opts = {});

std::vector<Graph> enumerate_connected(int n, int m, const EnumerationOptions& opts = {});

/// Connected graphs with m = n + 2.
std::vector<Graph> enumerate_tricyclic(int n, const EnumerationOptions& opts = {});

struct PositiveRecord {
  std::string graph6;
  std::int64_t a = 0, b = 0;
  std::string family;  // id plus parameters, empty when unmatched
  std::string shape;   // base shape name
  bool has_pendants = false;
};

struct Violation {
  std::string kind;
  std::string graph6;
  std::string detail;
};

struct EnumerationReport {
  int n = 0;
  std::int64_t connected_visited = 0;
  std::int64_t tricyclic = 0;
  std::int64_t pendant_free = 0;
  std::int64_t positives_count = 0;
  std::int64_t family_instances = 0;
  std::int64_t float_checked = 0;
  std::map<int, std::int64_t> cycle_counts;  // cycles -> graphs
  std::map<std::string, std::int64_t> shapes;  // pendant-free graphs by shape
  std::vector<PositiveRecord> positives;       // sorted by graph6
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  bool float_check = true;
};

/// Runs every cross-check on the connected tricyclic graphs of order n.
EnumerationReport verify_characterization(int n, const VerifyOptions& opts = {});

}  // namespace qmain
