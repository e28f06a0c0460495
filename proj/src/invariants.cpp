#include "qmain/invariants.hpp"

#include <map>
#include <optional>

#include "qmain/structure.hpp"

namespace qmain {
namespace {

void fail(LemmaCheck& c, const std::string& why) {
  if (c.passed) c.detail = why;
  c.passed = false;
}

std::string vtx(int v) { return "vertex " + std::to_string(v); }

}  // namespace

std::vector<LemmaCheck> check_lemmas(const Graph& g, const AbSolution& ab) {
  if (ab.kind != AbSolution::Kind::Unique) throw Error("lemma checks need a unique (a,b)");
  const DegreeProfile p = degree_profile(g);
  const double a_real = boost::rational_cast<double>(ab.a);
  const double b_real = boost::rational_cast<double>(ab.b);
  const Rational attach = ab.a + ab.b - 1;
  const auto pendants = pendant_vertices(g);

  std::vector<LemmaCheck> out;

  LemmaCheck sign{"sign_constraints", true, ""};
  if (!(ab.a > 0 && ab.b <= 0)) fail(sign, "a=" + std::to_string(a_real) + " b=" + std::to_string(b_real));
  out.push_back(sign);

  LemmaCheck integral{"integral_pair", true, ""};
  if (!ab.integral) fail(integral, "non-integral solution");
  out.push_back(integral);

  LemmaCheck equal_sum{"equal_degree_equal_neighbor_sum", true, ""};
  std::map<int, std::int64_t> sum_by_degree;
  for (int v = 0; v < g.order(); ++v) {
    auto [it, fresh] = sum_by_degree.emplace(p.degree[v], p.neighbor_degree_sum[v]);
    if (!fresh && it->second != p.neighbor_degree_sum[v]) fail(equal_sum, vtx(v));
  }
  out.push_back(equal_sum);

  LemmaCheck pendant_nb{"pendant_neighbor_degree", true, ""};
  for (int v : pendants) {
    const int u = g.neighbors(v).front();
    if (Rational(p.degree[u]) != attach) fail(pendant_nb, "neighbor of " + vtx(v));
  }
  if (!pendants.empty() && attach < 2) fail(pendant_nb, "a+b-1 < 2");
  out.push_back(pendant_nb);

  const BaseGraph bg = base(g);
  std::vector<int> base_degree(g.order(), -1);
  for (int i = 0; i < bg.graph.order(); ++i) base_degree[bg.original[i]] = bg.graph.degree(i);

  LemmaCheck short_hang{"pendant_path_length_one", true, ""};
  for (int v = 0; v < g.order(); ++v) {
    if (base_degree[v] >= 0) continue;
    if (p.degree[v] != 1) {
      fail(short_hang, vtx(v) + " hangs off the base but is not pendant");
      continue;
    }
    if (base_degree[g.neighbors(v).front()] < 0) fail(short_hang, vtx(v) + " is not adjacent to the base");
  }
  out.push_back(short_hang);

  LemmaCheck attached{"attached_vertex_degrees", true, ""};
  if (!pendants.empty()) {
    if (ab.b > -1) fail(attached, "b > -1 with pendants");
    for (int v = 0; v < g.order(); ++v) {
      if (base_degree[v] < 0) continue;
      if (p.degree[v] != base_degree[v] && Rational(p.degree[v]) != attach) fail(attached, vtx(v));
    }
  }
  out.push_back(attached);

  const auto segments = internal_segments_lenient(g);

  LemmaCheck seg_len{"internal_segment_length", true, ""};
  for (const auto& s : segments) {
    if (s.kind == InternalSegment::Kind::Cycle && s.length != 3) {
      fail(seg_len, "internal cycle of length " + std::to_string(s.length) + " at " + vtx(s.from));
    }
    if (s.kind == InternalSegment::Kind::Path && s.length > 3) {
      fail(seg_len, "internal path of length " + std::to_string(s.length) + " from " + vtx(s.from));
    }
  }
  out.push_back(seg_len);

  LemmaCheck len3{"length3_endpoint_degrees", true, ""};
  std::optional<int> len3_degree;
  for (const auto& s : segments) {
    if (s.kind != InternalSegment::Kind::Path || s.length != 3) continue;
    if (p.degree[s.from] != p.degree[s.to]) fail(len3, "unequal ends from " + vtx(s.from));
    if (len3_degree && *len3_degree != p.degree[s.from]) fail(len3, "two endpoint degrees");
    len3_degree = p.degree[s.from];
  }
  out.push_back(len3);

  LemmaCheck mixed{"length2_vs_length3", true, ""};
  if (len3_degree) {
    for (const auto& s : segments) {
      if (s.kind != InternalSegment::Kind::Path || s.length != 2) continue;
      if (p.degree[s.from] == *len3_degree && p.degree[s.to] == *len3_degree) {
        fail(mixed, "length-2 path from " + vtx(s.from));
      }
    }
  }
  out.push_back(mixed);
  return out;
}

bool all_passed(const std::vector<LemmaCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace qmain
