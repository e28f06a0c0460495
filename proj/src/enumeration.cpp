#include "qmain/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <thread>

#include "qmain/canonical.hpp"
#include "qmain/criterion.hpp"
#include "qmain/families.hpp"
#include "qmain/graph6.hpp"
#include "qmain/invariants.hpp"
#include "qmain/spectral.hpp"
#include "qmain/structure.hpp"

namespace qmain {
namespace {

using Level = std::map<std::string, Graph>;

void check_guard(int n, const EnumerationOptions& opts) {
  if (n < 1) throw Error("order must be positive");
  if (n > 64) throw Error("enumeration supports at most 64 vertices");
  if (!opts.force && n > enumeration_guard()) {
    throw Error("order " + std::to_string(n) + " exceeds the guard " + std::to_string(enumeration_guard()) +
                " (use force or QMAIN_GUARD_N)");
  }
}

void insert_canonical(Level& level, const Graph& g) {
  Graph c = canonical_graph(g);
  std::string key = graph6_encode(c);
  level.try_emplace(std::move(key), std::move(c));
}

// Applies `expand` to every parent, split across `jobs` threads, and merges
// the children. The merged map is independent of the split.
template <typename Expand>
Level expand_level(const std::vector<const Graph*>& parents, int jobs, Expand expand) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
  std::vector<Level> shards(jobs);
  auto work = [&](int shard) {
    for (std::size_t i = shard; i < parents.size(); i += jobs) expand(*parents[i], shards[shard]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < jobs; ++s) threads.emplace_back(work, s);
    for (auto& t : threads) t.join();
  }
  Level merged;
  for (auto& s : shards) merged.merge(s);
  return merged;
}

std::vector<const Graph*> pointers(const Level& level) {
  std::vector<const Graph*> out;
  for (const auto& [k, g] : level) out.push_back(&g);
  return out;
}

Level trees(int n, int jobs) {
  Level level;
  level.emplace(graph6_encode(Graph(1)), Graph(1));
  for (int size = 1; size < n; ++size) {
    level = expand_level(pointers(level), jobs, [](const Graph& t, Level& out) {
      for (int v = 0; v < t.order(); ++v) {
        Graph child = t;
        const int leaf = child.add_vertex();
        child.add_edge(v, leaf);
        insert_canonical(out, child);
      }
    });
  }
  return level;
}

Level add_one_edge(const Level& level, int jobs) {
  return expand_level(pointers(level), jobs, [](const Graph& g, Level& out) {
    for (int i = 0; i < g.order(); ++i) {
      for (int j = i + 1; j < g.order(); ++j) {
        if (g.has_edge(i, j)) continue;
        Graph child = g;
        child.add_edge(i, j);
        insert_canonical(out, child);
      }
    }
  });
}

std::vector<Graph> values(Level&& level) {
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [k, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace

int enumeration_guard() {
  if (const char* env = std::getenv("QMAIN_GUARD_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 64L));
  }
  return 12;
}

std::vector<std::vector<Graph>> enumerate_connected_levels(int n, int max_m, const EnumerationOptions& opts) {
  check_guard(n, opts);
  std::vector<std::vector<Graph>> out;
  const int top = std::min(max_m, n * (n - 1) / 2);
  if (top < n - 1) return out;
  // Every connected graph with a cycle loses a cycle edge and stays
  // connected, so adding edges level by level from the trees reaches all.
  Level level = trees(n, opts.jobs);
  for (int m = n - 1;; ++m) {
    Level next = m < top ? add_one_edge(level, opts.jobs) : Level{};
    out.push_back(values(std::move(level)));
    if (m == top) break;
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> enumerate_connected(int n, int m, const EnumerationOptions& opts) {
  check_guard(n, opts);
  if (m < n - 1 || m > n * (n - 1) / 2) return {};
  auto levels = enumerate_connected_levels(n, m, opts);
  return std::move(levels.back());
}

std::vector<Graph> enumerate_tricyclic(int n, const EnumerationOptions& opts) {
  if (n < 4) throw Error("tricyclic graphs need at least 4 vertices");
  return enumerate_connected(n, n + 2, opts);
}

namespace {

struct GraphResult {
  std::string graph6;
  bool positive = false;
  bool pendant_free = false;
  bool float_checked = false;
  int cycles = 0;
  std::string shape;
  PositiveRecord record;
  std::vector<Violation> violations;
};

GraphResult examine(const Graph& g, const std::map<std::string, std::string>& family_keys, bool float_check) {
  GraphResult r;
  r.graph6 = graph6_encode(g);  // graphs arrive canonically labeled
  auto violate = [&](std::string kind, std::string detail) {
    r.violations.push_back({std::move(kind), r.graph6, std::move(detail)});
  };

  const AbSolution ab = solve_ab(g);
  const int mains = exact_main_count(g);
  r.positive = ab.kind == AbSolution::Kind::Unique;
  if (r.positive != (mains == 2)) {
    violate("criterion_vs_rank", std::string("solve_ab=") + to_string(ab.kind) + " main_count=" + std::to_string(mains));
  }

  if (float_check) {
    r.float_checked = true;
    try {
      const QSpectrumReport qs = q_spectrum(g);
      if (qs.float_main_count() != mains) {
        violate("float_vs_exact", "float=" + std::to_string(qs.float_main_count()) + " exact=" + std::to_string(mains));
      }
      double sum = 0.0;
      for (const auto& grp : qs.groups) sum += grp.value * grp.multiplicity;
      const double trace = 2.0 * g.size();
      if (std::abs(sum - trace) > 1e-8 * std::max(1.0, trace)) violate("trace", std::to_string(sum));
    } catch (const ConvergenceError& e) {
      violate("float_vs_exact", e.what());
    }
  }

  r.cycles = count_cycles(g);
  if (r.cycles != 3 && r.cycles != 4 && r.cycles != 6 && r.cycles != 7) {
    violate("cycle_count", std::to_string(r.cycles) + " cycles");
  }

  const BaseGraph bg = base(g);
  r.pendant_free = bg.graph.order() == g.order();
  try {
    const BaseShape shape = classify_base(bg.graph);
    r.shape = shape.name();
    if (shape_template(shape.id).cycles != r.cycles) {
      violate("shape_cycles", r.shape + " with " + std::to_string(r.cycles) + " cycles");
    }
  } catch (const GraphError& e) {
    violate("base_shape", e.what());
  }

  if (r.positive) {
    r.record.graph6 = r.graph6;
    r.record.shape = r.shape;
    r.record.has_pendants = !r.pendant_free;
    if (ab.integral) {
      r.record.a = ab.a.numerator();
      r.record.b = ab.b.numerator();
    }
    for (const auto& check : check_lemmas(g, ab)) {
      if (!check.passed) violate("lemma:" + check.name, check.detail);
    }
    auto it = family_keys.find(r.graph6);
    if (it == family_keys.end()) {
      violate("unmatched_positive", "a=" + std::to_string(r.record.a) + " b=" + std::to_string(r.record.b));
    } else {
      r.record.family = it->second;
    }
  }
  return r;
}

}  // namespace

EnumerationReport verify_characterization(int n, const VerifyOptions& opts) {
  EnumerationReport report;
  report.n = n;
  auto levels = enumerate_connected_levels(n, n + 2, opts.enumeration);
  for (const auto& lv : levels) report.connected_visited += static_cast<std::int64_t>(lv.size());
  const std::vector<Graph> graphs = levels.size() == 4 ? std::move(levels.back()) : std::vector<Graph>{};
  report.tricyclic = static_cast<std::int64_t>(graphs.size());

  std::map<std::string, std::string> family_keys;
  for (const auto& inst : enumerate_family_instances(n)) {
    const std::string key = canonical_form(inst.graph).key;
    const std::string label = inst.desc.id + format_params(inst.desc.params);
    auto [it, fresh] = family_keys.emplace(key, label);
    if (!fresh) it->second += "|" + label;
  }
  report.family_instances = static_cast<std::int64_t>(family_keys.size());

  std::vector<GraphResult> results(graphs.size());
  const int jobs = std::max(1, std::min<int>(opts.enumeration.jobs, static_cast<int>(graphs.size())));
  auto work = [&](int shard) {
    for (std::size_t i = shard; i < graphs.size(); i += jobs) {
      results[i] = examine(graphs[i], family_keys, opts.float_check);
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < jobs; ++s) threads.emplace_back(work, s);
    for (auto& t : threads) t.join();
  }

  std::set<std::string> positive_keys;
  for (auto& r : results) {
    ++report.cycle_counts[r.cycles];
    if (r.float_checked) ++report.float_checked;
    if (r.pendant_free) {
      ++report.pendant_free;
      ++report.shapes[r.shape.empty() ? "unclassified" : r.shape];
    }
    if (r.positive) {
      positive_keys.insert(r.graph6);
      report.positives.push_back(std::move(r.record));
    }
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  report.positives_count = static_cast<std::int64_t>(report.positives.size());
  for (const auto& [key, label] : family_keys) {
    if (!positive_keys.count(key)) report.violations.push_back({"missing_family_instance", key, label});
  }
  std::sort(report.positives.begin(), report.positives.end(),
            [](const PositiveRecord& x, const PositiveRecord& y) { return x.graph6 < y.graph6; });
  return report;
}

}  // namespace qmain
