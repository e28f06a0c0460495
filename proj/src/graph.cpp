#include "qmain/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace qmain {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw GraphError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row_ptr(u)[v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw GraphError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  row_ptr(u)[v / 64] |= std::uint64_t{1} << (v % 64);
  row_ptr(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  row_ptr(u)[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  row_ptr(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --m_;
}

int Graph::add_vertex() {
  const int new_words = (n_ + 1 + 63) / 64;
  if (new_words != words_) {
    std::vector<std::uint64_t> grown(static_cast<std::size_t>(n_ + 1) * new_words, 0);
    for (int v = 0; v < n_; ++v) {
      std::copy_n(row_ptr(v), words_, grown.data() + static_cast<std::size_t>(v) * new_words);
    }
    bits_ = std::move(grown);
    words_ = new_words;
  } else {
    bits_.resize(static_cast<std::size_t>(n_ + 1) * words_, 0);
  }
  return n_++;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row_ptr(v)[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {row_ptr(v), static_cast<std::size_t>(words_)};
}

std::uint64_t Graph::row64(int v) const {
  if (n_ > 64) throw GraphError("row64 requires at most 64 vertices");
  return row_ptr(v)[0];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> new_id) const {
  if (static_cast<int>(new_id.size()) != n_) throw GraphError("relabeling has wrong length");
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(new_id[u], new_id[v]);
  return out;
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (auto [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree.resize(g.order());
  p.neighbor_degree_sum.assign(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) p.degree[v] = g.degree(v);
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) p.neighbor_degree_sum[v] += p.degree[u];
  }
  return p;
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw GraphError("not connected");
  return g.size() - g.order() + 1;
}

std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

BaseGraph base(const Graph& g) {
  if (cyclomatic_number(g) < 1) throw GraphError("base undefined for acyclic graph");
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::queue<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (removed[v] || deg[v] != 1) continue;
    removed[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push(w);
    }
  }
  BaseGraph out;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) out.original.push_back(v);
  }
  out.graph = g.induced(out.original);
  return out;
}

int count_cycles(const Graph& g) {
  const int c = cyclomatic_number(g);
  if (c > 3) throw GraphError("unsupported cyclomatic number");
  if (c == 0) return 0;

  const std::vector<Edge> edges = g.edges();
  std::map<Edge, int> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);
  auto index_of = [&](int u, int v) { return edge_index.at({std::min(u, v), std::max(u, v)}); };

  // BFS spanning tree; each non-tree edge closes one fundamental cycle.
  const int n = g.order();
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<char> tree_edge(edges.size(), 0);
  std::queue<int> q;
  q.push(0);
  depth[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        tree_edge[index_of(v, w)] = 1;
        q.push(w);
      }
    }
  }

  std::vector<std::vector<char>> fundamental;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    std::vector<char> cyc(edges.size(), 0);
    cyc[e] = 1;
    int a = edges[e].first, b = edges[e].second;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cyc[index_of(a, parent[a])] ^= 1;
      a = parent[a];
    }
    fundamental.push_back(std::move(cyc));
  }

  int count = 0;
  for (unsigned mask = 1; mask < (1U << fundamental.size()); ++mask) {
    std::vector<char> sum(edges.size(), 0);
    for (std::size_t i = 0; i < fundamental.size(); ++i) {
      if (mask & (1U << i)) {
        for (std::size_t e = 0; e < edges.size(); ++e) sum[e] ^= fundamental[i][e];
      }
    }
    // A cycle-space element is a single cycle iff it is connected and 2-regular.
    std::vector<int> local_deg(n, 0);
    std::vector<std::vector<int>> adj(n);
    int start = -1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!sum[e]) continue;
      auto [u, v] = edges[e];
      ++local_deg[u];
      ++local_deg[v];
      adj[u].push_back(v);
      adj[v].push_back(u);
      start = u;
    }
    bool two_regular = true;
    int touched = 0;
    for (int v = 0; v < n; ++v) {
      if (local_deg[v] == 0) continue;
      ++touched;
      if (local_deg[v] != 2) two_regular = false;
    }
    if (!two_regular || start < 0) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == touched) ++count;
  }
  return count;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace qmain
