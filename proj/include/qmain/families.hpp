#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

using FamilyParams = std::map<std::string, int>;

/// Recipe for one concrete family member: a base shape with its slot
/// lengths, plus where pendants hang.
struct FamilyDescriptor {
  std::string id;  // "G1".."G42"
  int shape = 0;   // template id, see shape_template()
  std::vector<int> slot_lengths;
  /// Pendants on each template vertex.
  std::vector<int> branch_pendants;
  /// Pendants on the interior vertices of each slot, listed from the slot's
  /// first endpoint. Missing entries mean zero.
  std::vector<std::vector<int>> interior_pendants;
  std::int64_t a = 0;
  std::int64_t b = 0;
  FamilyParams params;
};

struct FamilyInfo {
  std::string id;
  int shape;
  /// Expected (a,b); for G42 the values at the minimal parameter.
  std::int64_t a, b;
  bool has_pendants;
  std::vector<std::string> param_names;
  FamilyParams minimal_params;
};

struct FamilyInstance {
  FamilyDescriptor desc;
  Graph graph;
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_info(const std::string& id);

/// Fills in the descriptor for a family id and parameter set. Throws on an
/// unknown id or out-of-range parameters. For G42, either k or (a, b) may
/// be given.
FamilyDescriptor describe_family(const std::string& id, const FamilyParams& params = {});

/// Realizes a descriptor without any checks.
Graph realize(const FamilyDescriptor& desc);

/// Realizes and gates the result: every vertex must satisfy the degree
/// equation with the descriptor's (a,b) and the walk matrix must have
/// rank 2. A failing gate is a builder bug and throws.
Graph build_family(const FamilyDescriptor& desc);

/// Integer pairs with b in [-10,-1], a in [1,50] and a+b-1 >= 4 satisfying
/// ab + b^2 + 3a + b = 6.
std::vector<std::pair<int, int>> solve_pendant_k4_relation();

/// All family members with exactly n vertices.
std::vector<FamilyInstance> enumerate_family_instances(int n);

/// The family member isomorphic to g, if any.
std::optional<FamilyDescriptor> match_family(const Graph& g);

std::string format_params(const FamilyParams& params);

}  // namespace qmain
