#pragma once

#include <string>
#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

/// Maximal chain of degree-2 vertices between two branch vertices
/// (degree >= 3). A cycle segment starts and ends at the same vertex.
struct InternalSegment {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  int from = 0;
  int to = 0;
  int length = 0;
  std::vector<int> interior;  // in walking order from `from`
};

/// Strict decomposition of a pendant-free graph. Throws on pendant vertices
/// and on a graph with no branch vertex.
std::vector<InternalSegment> internal_segments(const Graph& base);

/// Same walk on an arbitrary graph using its own degrees; chains that end
/// in a pendant vertex are not segments and are skipped.
std::vector<InternalSegment> internal_segments_lenient(const Graph& g);

struct ReducedMultigraph {
  std::vector<int> branch;  // base vertex ids, ascending
  struct Link {
    int u, v;  // indices into branch; u == v for a loop
    int length;
  };
  std::vector<Link> links;
};

ReducedMultigraph reduced_multigraph(const Graph& base);

struct ShapeTemplate {
  int id;  // 1..15
  int vertices;
  struct Slot {
    const char* name;
    int u, v;
  };
  std::vector<Slot> slots;
  int cycles;
};

/// The fifteen pendant-free tricyclic shapes, indexed by id - 1.
const std::vector<ShapeTemplate>& shape_templates();
const ShapeTemplate& shape_template(int id);

struct BaseShape {
  int id = 0;
  std::vector<int> slot_lengths;  // parallel to shape_template(id).slots
  std::vector<int> anchors;       // base vertex realizing each template vertex
  std::string name() const { return "T" + std::to_string(id); }
};

/// Requires a connected, pendant-free graph with cyclomatic number 3.
BaseShape classify_base(const Graph& base);

}  // namespace qmain
