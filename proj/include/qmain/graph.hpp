#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's structural precondition does not hold
/// (disconnected input, acyclic input for base(), ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

using Edge = std::pair<int, int>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored as one bitset row per vertex, packed into 64-bit
 * words. Graphs up to 64 vertices use a single word per row, which is the
 * layout the canonical labeling and the enumerator rely on; larger graphs
 * are supported everywhere else.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  /// Adds {u,v}. Self-loops and repeated edges are rejected.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int add_vertex();

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::span<const std::uint64_t> row(int v) const;
  /// Single-word adjacency row; only valid when order() <= 64.
  std::uint64_t row64(int v) const;
  int words_per_row() const noexcept { return words_; }

  std::vector<Edge> edges() const;

  /// new_id[v] is the label vertex v receives in the result.
  Graph relabeled(std::span<const int> new_id) const;
  /// Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const int> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  std::uint64_t* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row_ptr(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// d(v) and S(v) = sum of d(u) over the neighbours u of v.
struct DegreeProfile {
  std::vector<int> degree;
  std::vector<std::int64_t> neighbor_degree_sum;
};

/// Result of iterated pendant deletion. Vertex i of `graph` is
/// vertex `original[i]` of the input.
struct BaseGraph {
  Graph graph;
  std::vector<int> original;
};

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
DegreeProfile degree_profile(const Graph& g);

/// |E| - |V| + 1; throws GraphError("not connected") otherwise.
int cyclomatic_number(const Graph& g);

std::vector<int> pendant_vertices(const Graph& g);

/// Repeatedly strips degree-1 vertices. Requires a connected graph with at
/// least one cycle.
BaseGraph base(const Graph& g);

/// Number of distinct cycles (as edge sets). Only defined for connected
/// graphs with cyclomatic number at most 3.
int count_cycles(const Graph& g);

// Small named graphs used throughout tests and examples.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace qmain
