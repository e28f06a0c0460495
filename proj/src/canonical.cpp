#include "qmain/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "qmain/graph6.hpp"

namespace qmain {
namespace {

using Cells = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into every other cell until the
// partition is equitable. Fragments keep ascending count order, so the
// result depends only on the structure of the ordered partition.
void refine(const std::vector<std::uint64_t>& rows, Cells& cells) {
  std::vector<std::pair<int, int>> tagged;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const std::uint64_t splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::uint64_t cell = cells[c];
        if (std::has_single_bit(cell)) continue;
        tagged.clear();
        for (std::uint64_t b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          tagged.emplace_back(std::popcount(rows[v] & splitter), v);
        }
        bool uniform = true;
        for (const auto& t : tagged) uniform = uniform && t.first == tagged.front().first;
        if (uniform) continue;
        std::sort(tagged.begin(), tagged.end());
        Cells fragments;
        int last = -1;
        for (auto [count, v] : tagged) {
          if (count != last) {
            fragments.push_back(0);
            last = count;
          }
          fragments.back() |= std::uint64_t{1} << v;
        }
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), fragments.begin(), fragments.end());
        c += fragments.size() - 1;
        changed = true;
      }
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()), rows_(g.order()) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.row64(v);
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    Cells cells;
    // Start from the degree partition.
    std::map<int, std::uint64_t> by_degree;
    for (int v = 0; v < n_; ++v) by_degree[std::popcount(rows_[v])] |= std::uint64_t{1} << v;
    for (auto& [d, mask] : by_degree) cells.push_back(mask);
    refine(rows_, cells);
    descend(cells);
    return best_label_;
  }

 private:
  int descend(const Cells& cells) {
    const int depth = static_cast<int>(path_.size());
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!std::has_single_bit(cells[i])) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) return leaf(cells);

    for (std::uint64_t b = cells[target]; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      child.push_back(std::uint64_t{1} << v);
      child.push_back(cells[target] & ~(std::uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      refine(rows_, child);
      path_.push_back(v);
      const int jump = descend(child);
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  // Returns the level to resume at when this leaf repeats an earlier one:
  // the two paths differ by an automorphism, so the rest of the subtree
  // below their common ancestor's current child is already covered.
  int leaf(const Cells& cells) {
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[std::countr_zero(cells[i])] = i;
    std::vector<std::uint64_t> relabeled(n_, 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t r = 0;
      for (std::uint64_t b = rows_[v]; b != 0; b &= b - 1) {
        r |= std::uint64_t{1} << label[std::countr_zero(b)];
      }
      relabeled[label[v]] = r;
    }
    auto [it, inserted] = seen_.try_emplace(relabeled, path_);
    if (!inserted) {
      const auto& other = it->second;
      int common = 0;
      while (common < static_cast<int>(other.size()) && other[common] == path_[common]) ++common;
      return common;
    }
    if (best_label_.empty() || relabeled < best_rows_) {
      best_rows_ = std::move(relabeled);
      best_label_ = std::move(label);
    }
    return -1;
  }

  int n_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> path_;
  std::map<std::vector<std::uint64_t>, std::vector<int>> seen_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_label_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > 64) throw GraphError("canonical form requires at most 64 vertices");
  return Search(g).run();
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace qmain
