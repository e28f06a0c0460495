#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

/// Isomorphism-invariant key: equal keys iff the graphs are isomorphic.
/// The key is the graph6 text of a canonically relabeled copy.
struct CanonicalForm {
  std::string key;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// label[v] is the canonical position of vertex v. Requires order() <= 64.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace qmain
