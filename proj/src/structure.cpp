#include "qmain/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qmain {
namespace {

std::vector<InternalSegment> walk_segments(const Graph& g) {
  std::vector<InternalSegment> out;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 3) continue;
    for (int first : g.neighbors(u)) {
      InternalSegment seg;
      seg.from = u;
      int prev = u, cur = first;
      while (g.degree(cur) == 2) {
        seg.interior.push_back(cur);
        const auto nb = g.neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) < 3) continue;  // ran into a pendant
      seg.to = cur;
      seg.length = static_cast<int>(seg.interior.size()) + 1;
      // Each segment is met once from each end; keep one orientation.
      if (cur == u) {
        if (seg.interior.empty() || seg.interior.front() > seg.interior.back()) continue;
        seg.kind = InternalSegment::Kind::Cycle;
      } else if (cur < u) {
        continue;
      }
      out.push_back(std::move(seg));
    }
  }
  return out;
}

}  // namespace

std::vector<InternalSegment> internal_segments(const Graph& base) {
  bool branch = false;
  for (int v = 0; v < base.order(); ++v) {
    if (base.degree(v) == 1) throw GraphError("graph has pendant vertices");
    if (base.degree(v) >= 3) branch = true;
  }
  if (!branch) throw GraphError("no branch vertices");
  return walk_segments(base);
}

std::vector<InternalSegment> internal_segments_lenient(const Graph& g) { return walk_segments(g); }

ReducedMultigraph reduced_multigraph(const Graph& base) {
  const auto segments = internal_segments(base);
  ReducedMultigraph out;
  std::vector<int> index(base.order(), -1);
  for (int v = 0; v < base.order(); ++v) {
    if (base.degree(v) >= 3) {
      index[v] = static_cast<int>(out.branch.size());
      out.branch.push_back(v);
    }
  }
  for (const auto& s : segments) out.links.push_back({index[s.from], index[s.to], s.length});
  return out;
}

const std::vector<ShapeTemplate>& shape_templates() {
  static const std::vector<ShapeTemplate> table = {
      {1, 2, {{"r1", 0, 0}, {"r3", 1, 1}, {"k1", 0, 1}, {"k2", 0, 1}}, 3},
      {2, 3, {{"r1", 0, 0}, {"r3", 2, 2}, {"k1", 0, 1}, {"k2", 0, 1}, {"k3", 1, 2}}, 3},
      {3, 1, {{"r1", 0, 0}, {"r2", 0, 0}, {"r3", 0, 0}}, 3},
      {4, 4, {{"r1", 1, 1}, {"r3", 3, 3}, {"k1", 0, 2}, {"k2", 0, 2}, {"k3", 0, 1}, {"k4", 2, 3}}, 3},
      {5, 2, {{"r1", 0, 0}, {"r2", 0, 0}, {"r3", 1, 1}, {"k1", 0, 1}}, 3},
      {6, 4, {{"r1", 1, 1}, {"r2", 2, 2}, {"r3", 3, 3}, {"k1", 0, 1}, {"k2", 0, 2}, {"k3", 0, 3}}, 3},
      {7, 3, {{"r1", 0, 0}, {"r2", 1, 1}, {"r3", 2, 2}, {"k1", 0, 1}, {"k2", 0, 2}}, 3},
      {8, 3, {{"r1", 0, 0}, {"k1", 1, 2}, {"k2", 1, 2}, {"k3", 0, 1}, {"k4", 0, 2}}, 4},
      {9, 2, {{"r1", 0, 0}, {"k1", 0, 1}, {"k2", 0, 1}, {"k3", 0, 1}}, 4},
      {10, 3, {{"r1", 0, 0}, {"k1", 0, 1}, {"k2", 1, 2}, {"k3", 1, 2}, {"k4", 1, 2}}, 4},
      {11, 4, {{"r1", 0, 0}, {"k1", 2, 3}, {"k2", 2, 3}, {"k3", 2, 1}, {"k4", 3, 1}, {"k5", 0, 1}}, 4},
      {12, 2, {{"k1", 0, 1}, {"k2", 0, 1}, {"k3", 0, 1}, {"k4", 0, 1}}, 6},
      {13, 3, {{"k1", 0, 1}, {"k2", 0, 1}, {"k3", 0, 2}, {"k4", 0, 2}, {"k5", 1, 2}}, 6},
      {14, 4, {{"k1", 0, 1}, {"k2", 0, 1}, {"k3", 2, 3}, {"k4", 2, 3}, {"k5", 0, 2}, {"k6", 1, 3}}, 6},
      {15, 4, {{"k1", 0, 1}, {"k2", 0, 2}, {"k3", 0, 3}, {"k4", 1, 2}, {"k5", 2, 3}, {"k6", 1, 3}}, 7},
  };
  return table;
}

const ShapeTemplate& shape_template(int id) {
  if (id < 1 || id > 15) throw Error("unknown shape T" + std::to_string(id));
  return shape_templates()[id - 1];
}

BaseShape classify_base(const Graph& base) {
  if (cyclomatic_number(base) != 3) throw GraphError("not a tricyclic base");
  const ReducedMultigraph rm = reduced_multigraph(base);
  const int b = static_cast<int>(rm.branch.size());

  auto key = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };

  for (const auto& t : shape_templates()) {
    if (t.vertices != b || t.slots.size() != rm.links.size()) continue;
    std::map<std::pair<int, int>, std::vector<int>> slot_groups;  // template pair -> slot indices
    for (std::size_t i = 0; i < t.slots.size(); ++i) {
      slot_groups[key(t.slots[i].u, t.slots[i].v)].push_back(static_cast<int>(i));
    }

    std::vector<int> perm(b);  // branch index -> template vertex
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    BaseShape best;
    do {
      std::map<std::pair<int, int>, std::vector<int>> lengths;
      for (const auto& l : rm.links) lengths[key(perm[l.u], perm[l.v])].push_back(l.length);
      if (lengths.size() != slot_groups.size()) continue;
      bool ok = true;
      std::vector<int> assigned(t.slots.size());
      for (auto& [pair, slots] : slot_groups) {
        auto it = lengths.find(pair);
        if (it == lengths.end() || it->second.size() != slots.size()) {
          ok = false;
          break;
        }
        std::sort(it->second.begin(), it->second.end());
        for (std::size_t i = 0; i < slots.size(); ++i) assigned[slots[i]] = it->second[i];
      }
      if (!ok) continue;
      if (!found || assigned < best.slot_lengths) {
        found = true;
        best.id = t.id;
        best.slot_lengths = assigned;
        best.anchors.assign(b, -1);
        for (int i = 0; i < b; ++i) best.anchors[perm[i]] = rm.branch[i];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found) return best;
  }
  throw GraphError("not a tricyclic base");
}

}  // namespace qmain
