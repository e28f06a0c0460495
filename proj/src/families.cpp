#include "qmain/families.hpp"

#include <algorithm>
#include <functional>

#include "qmain/canonical.hpp"
#include "qmain/criterion.hpp"
#include "qmain/spectral.hpp"
#include "qmain/structure.hpp"

namespace qmain {
namespace {

struct Entry {
  FamilyInfo info;
  std::function<FamilyDescriptor(const FamilyParams&)> make;
  // Parameter sets whose realization has exactly n vertices.
  std::function<std::vector<FamilyParams>(int n)> params_for_order;
};

int need(const FamilyParams& p, const std::string& key, int min) {
  auto it = p.find(key);
  if (it == p.end()) throw Error("missing parameter " + key);
  if (it->second < min) throw Error("parameter " + key + " must be >= " + std::to_string(min));
  return it->second;
}

void reject_unknown(const FamilyParams& p, const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : p) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw Error("unknown parameter " + k);
    }
  }
}

FamilyDescriptor plain(const std::string& id, int shape, std::int64_t a, std::int64_t b,
                       std::vector<int> lengths) {
  FamilyDescriptor d;
  d.id = id;
  d.shape = shape;
  d.slot_lengths = std::move(lengths);
  d.branch_pendants.assign(shape_template(shape).vertices, 0);
  d.interior_pendants.assign(d.slot_lengths.size(), {});
  d.a = a;
  d.b = b;
  return d;
}

int order_of(const FamilyDescriptor& d) {
  int n = shape_template(d.shape).vertices;
  for (int len : d.slot_lengths) n += len - 1;
  for (int p : d.branch_pendants) n += p;
  for (const auto& slot : d.interior_pendants)
    for (int p : slot) n += p;
  return n;
}

Entry fixed(const std::string& id, int shape, std::int64_t a, std::int64_t b, std::vector<int> lengths,
            std::vector<int> branch_pendants = {}, std::vector<std::vector<int>> interior = {}) {
  FamilyDescriptor d = plain(id, shape, a, b, std::move(lengths));
  if (!branch_pendants.empty()) d.branch_pendants = std::move(branch_pendants);
  for (std::size_t i = 0; i < interior.size(); ++i) d.interior_pendants[i] = interior[i];
  const bool pendants = order_of(d) > order_of(plain(id, shape, a, b, d.slot_lengths));
  const int n = order_of(d);
  Entry e;
  e.info = {id, shape, a, b, pendants, {}, {}};
  e.make = [d](const FamilyParams& p) {
    reject_unknown(p, {});
    return d;
  };
  e.params_for_order = [n](int order) {
    return order == n ? std::vector<FamilyParams>{{}} : std::vector<FamilyParams>{};
  };
  return e;
}

std::vector<int> repeat(int count, int value) { return std::vector<int>(std::max(count, 0), value); }

// T14 with two paths carrying one pendant per interior vertex. The two
// lengths are interchangeable, so only first <= second is generated.
Entry pendant_pair_family(const std::string& id, const std::string& p1, const std::string& p2,
                          std::function<FamilyDescriptor(int, int)> shape_of) {
  Entry e;
  e.info = {id, 14, 6, -2, true, {p1, p2}, {{p1, 1}, {p2, 2}}};
  e.make = [=](const FamilyParams& p) {
    reject_unknown(p, {p1, p2});
    const int x = need(p, p1, 1), y = need(p, p2, 1);
    if (x == 1 && y == 1) throw Error(p1 + " and " + p2 + " cannot both be 1");
    FamilyDescriptor d = shape_of(x, y);
    d.params = p;
    return d;
  };
  e.params_for_order = [=](int n) {
    // n = 8 + 2 (x + y - 2)
    std::vector<FamilyParams> out;
    if (n < 10 || (n - 8) % 2 != 0) return out;
    const int total = (n - 8) / 2 + 2;
    for (int x = 1; 2 * x <= total; ++x) out.push_back({{p1, x}, {p2, total - x}});
    return out;
  };
  return e;
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  // Pendant-free families.
  r.push_back(fixed("G1", 1, 8, -6, {3, 3, 1, 3}));
  r.push_back(fixed("G2", 1, 7, -4, {3, 3, 3, 3}));
  r.push_back(fixed("G3", 3, 9, -6, {3, 3, 3}));
  r.push_back(fixed("G4", 4, 7, -5, {3, 3, 3, 3, 1, 1}));
  r.push_back(fixed("G5", 4, 6, -3, {3, 3, 3, 3, 3, 3}));
  r.push_back(fixed("G6", 6, 6, -3, {3, 3, 3, 3, 3, 3}));
  r.push_back(fixed("G7", 8, 8, -6, {3, 1, 2, 1, 1}));
  r.push_back(fixed("G8", 11, 7, -5, {3, 1, 3, 3, 3, 1}));
  r.push_back(fixed("G9", 11, 6, -3, {3, 3, 3, 3, 3, 3}));
  r.push_back(fixed("G10", 12, 7, -2, {1, 2, 2, 2}));
  r.push_back(fixed("G11", 12, 8, -6, {1, 3, 3, 3}));
  r.push_back(fixed("G12", 12, 6, 0, {2, 2, 2, 2}));
  r.push_back(fixed("G13", 12, 7, -4, {3, 3, 3, 3}));
  r.push_back(fixed("G14", 14, 7, -4, {1, 2, 1, 2, 1, 1}));
  r.push_back(fixed("G15", 14, 6, -2, {1, 2, 1, 2, 2, 2}));
  r.push_back(fixed("G16", 14, 6, -2, {2, 2, 2, 2, 1, 1}));
  r.push_back(fixed("G17", 14, 5, 0, {2, 2, 2, 2, 2, 2}));
  r.push_back(fixed("G18", 14, 8, -7, {1, 3, 1, 3, 1, 1}));
  r.push_back(fixed("G19", 14, 7, -5, {1, 3, 1, 3, 3, 3}));
  r.push_back(fixed("G20", 14, 7, -5, {3, 3, 3, 3, 1, 1}));
  r.push_back(fixed("G21", 14, 6, -3, {3, 3, 3, 3, 3, 3}));
  r.push_back(fixed("G22", 15, 7, -4, {1, 1, 2, 2, 1, 1}));
  r.push_back(fixed("G23", 15, 8, -7, {1, 1, 3, 3, 1, 1}));
  r.push_back(fixed("G24", 15, 6, -2, {1, 2, 2, 2, 1, 2}));
  r.push_back(fixed("G25", 15, 7, -5, {1, 3, 3, 3, 1, 3}));
  r.push_back(fixed("G26", 15, 5, 0, {2, 2, 2, 2, 2, 2}));
  r.push_back(fixed("G27", 15, 6, -3, {3, 3, 3, 3, 3, 3}));

  // Families with pendants.
  // T4 slots: r1 r3 k1 k2 k3 k4
  r.push_back(fixed("G28", 4, 6, -1, {3, 3, 2, 2, 2, 3}, {1, 0, 0, 0},
                    {{0, 2}, {0, 2}, {}, {}, {}, {2, 0}}));
  // T6 slots: r1 r2 r3 k1 k2 k3
  r.push_back(fixed("G29", 6, 6, -1, {3, 3, 3, 2, 2, 2}, {1, 0, 0, 0}, {{0, 2}, {0, 2}, {0, 2}}));
  // T11 slots: r1 k1 k2 k3 k4 k5
  r.push_back(fixed("G30", 11, 6, -1, {3, 3, 3, 2, 2, 2}, {0, 1, 0, 0}, {{0, 2}, {0, 2}, {2, 0}}));
  r.push_back(fixed("G31", 11, 6, -1, {3, 2, 2, 2, 3, 3}, {0, 0, 1, 0},
                    {{0, 2}, {}, {}, {}, {2, 0}, {0, 2}}));

  {
    Entry e;
    e.info = {"G32", 12, 7, -2, true, {"k"}, {{"k", 2}}};
    e.make = [](const FamilyParams& p) {
      reject_unknown(p, {"k"});
      const int k = need(p, "k", 2);
      FamilyDescriptor d = plain("G32", 12, 7, -2, {2, 2, 2, k});
      d.interior_pendants[3] = repeat(k - 1, 2);
      d.params = p;
      return d;
    };
    e.params_for_order = [](int n) {
      std::vector<FamilyParams> out;
      if (n >= 8 && (n - 5) % 3 == 0) out.push_back({{"k", (n - 5) / 3 + 1}});
      return out;
    };
    r.push_back(e);
  }

  // T14 slots: k1 k2 (u1-u2) k3 k4 (v1-v2) k5 (u1-v1) k6 (u2-v2)
  r.push_back(fixed("G33", 14, 6, -1, {2, 2, 3, 3, 3, 2}, {0, 1, 0, 0},
                    {{}, {}, {0, 2}, {2, 0}, {2, 0}, {}}));
  r.push_back(pendant_pair_family("G34", "k5", "k6", [](int x, int y) {
    FamilyDescriptor d = plain("G34", 14, 6, -2, {2, 2, 2, 2, x, y});
    d.interior_pendants[4] = repeat(x - 1, 1);
    d.interior_pendants[5] = repeat(y - 1, 1);
    return d;
  }));
  r.push_back(pendant_pair_family("G35", "k1", "k3", [](int x, int y) {
    FamilyDescriptor d = plain("G35", 14, 6, -2, {x, 2, y, 2, 2, 2});
    d.interior_pendants[0] = repeat(x - 1, 1);
    d.interior_pendants[2] = repeat(y - 1, 1);
    return d;
  }));
  r.push_back(fixed("G36", 14, 7, -1, {1, 2, 1, 2, 1, 1}, {}, {{}, {3}, {}, {3}}));

  // T15 slots: k1 v1v2, k2 v1v3, k3 v1v4, k4 v2v3, k5 v3v4, k6 v2v4
  {
    Entry e;
    e.info = {"G37", 15, 8, -2, true, {"k"}, {{"k", 1}}};
    e.make = [](const FamilyParams& p) {
      reject_unknown(p, {"k"});
      const int k = need(p, "k", 1);
      FamilyDescriptor d = plain("G37", 15, 8, -2, {1, 1, 1, 1, k, 1});
      d.branch_pendants = {0, 0, 2, 2};
      d.interior_pendants[4] = repeat(k - 1, 3);
      d.params = p;
      return d;
    };
    e.params_for_order = [](int n) {
      std::vector<FamilyParams> out;
      if (n >= 8 && n % 4 == 0) out.push_back({{"k", n / 4 - 1}});
      return out;
    };
    r.push_back(e);
  }
  r.push_back(fixed("G38", 15, 7, -2, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 1}));
  r.push_back(fixed("G39", 15, 7, -1, {1, 1, 2, 2, 1, 1}, {}, {{}, {}, {3}, {3}}));
  r.push_back(fixed("G40", 15, 6, -1, {2, 1, 1, 2, 1, 2}, {0, 1, 0, 0}));
  r.push_back(fixed("G41", 15, 6, -1, {3, 2, 3, 2, 2, 3}, {0, 0, 1, 0},
                    {{0, 2}, {}, {2, 0}, {}, {}, {0, 2}}));
  {
    Entry e;
    e.info = {"G42", 15, 8, -3, true, {"k"}, {{"k", 1}}};
    e.make = [](const FamilyParams& p) {
      reject_unknown(p, {"k", "a", "b"});
      int k = 0;
      if (p.count("k")) {
        k = need(p, "k", 1);
        if (p.count("a") && p.at("a") != k + 7) throw Error("a must equal k + 7");
        if (p.count("b") && p.at("b") != -3) throw Error("b must be -3");
      } else {
        const int a = need(p, "a", 1);
        const int b = p.count("b") ? p.at("b") : -3;
        const auto sols = solve_pendant_k4_relation();
        if (std::find(sols.begin(), sols.end(), std::make_pair(a, b)) == sols.end() &&
            !(b == -3 && a >= 8)) {
          throw Error("(a,b) = (" + std::to_string(a) + "," + std::to_string(b) +
                      ") does not satisfy ab + b^2 + 3a + b = 6 with a + b - 1 >= 4");
        }
        k = a + b - 4;
      }
      FamilyDescriptor d = plain("G42", 15, k + 7, -3, {1, 1, 1, 1, 1, 1});
      d.branch_pendants = {k, k, k, k};
      d.params = {{"k", k}};
      return d;
    };
    e.params_for_order = [](int n) {
      std::vector<FamilyParams> out;
      if (n >= 8 && n % 4 == 0) out.push_back({{"k", n / 4 - 1}});
      return out;
    };
    r.push_back(e);
  }
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw Error("unknown family " + id);
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const FamilyInfo& family_info(const std::string& id) { return entry(id).info; }

FamilyDescriptor describe_family(const std::string& id, const FamilyParams& params) {
  return entry(id).make(params);
}

Graph realize(const FamilyDescriptor& d) {
  const ShapeTemplate& t = shape_template(d.shape);
  if (d.slot_lengths.size() != t.slots.size()) throw Error(d.id + ": wrong number of slot lengths");
  Graph g(t.vertices);
  auto hang = [&](int v, int count) {
    for (int i = 0; i < count; ++i) g.add_edge(v, g.add_vertex());
  };
  for (std::size_t s = 0; s < t.slots.size(); ++s) {
    const int len = d.slot_lengths[s];
    const auto& slot = t.slots[s];
    if (len < 1 || (slot.u == slot.v && len < 3)) throw Error(d.id + ": slot " + slot.name + " too short");
    const std::vector<int> pend = s < d.interior_pendants.size() ? d.interior_pendants[s] : std::vector<int>{};
    if (static_cast<int>(pend.size()) > len - 1) throw Error(d.id + ": too many interior pendant entries");
    int prev = slot.u;
    for (int i = 0; i < len - 1; ++i) {
      const int x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, slot.v);
    // Interior vertices were appended in order; hang their pendants now.
    const int first_interior = g.order() - (len - 1);
    for (std::size_t i = 0; i < pend.size(); ++i) hang(first_interior + static_cast<int>(i), pend[i]);
  }
  for (std::size_t v = 0; v < d.branch_pendants.size(); ++v) hang(static_cast<int>(v), d.branch_pendants[v]);
  return g;
}

Graph build_family(const FamilyDescriptor& desc) {
  Graph g = realize(desc);
  const auto report = check_membership(g, desc.a, desc.b);
  if (!report.member) {
    throw Error(desc.id + format_params(desc.params) + ": realized graph is not in G(" + std::to_string(desc.a) +
                "," + std::to_string(desc.b) + ")");
  }
  if (exact_main_count(g) != 2) throw Error(desc.id + ": realized graph does not have two main eigenvalues");
  return g;
}

std::vector<std::pair<int, int>> solve_pendant_k4_relation() {
  std::vector<std::pair<int, int>> out;
  for (int b = -10; b <= -1; ++b) {
    for (int a = 1; a <= 50; ++a) {
      if (a + b - 1 >= 4 && a * b + b * b + 3 * a + b == 6) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<FamilyInstance> enumerate_family_instances(int n) {
  std::vector<FamilyInstance> out;
  for (const auto& e : registry()) {
    for (const auto& p : e.params_for_order(n)) {
      FamilyDescriptor d = e.make(p);
      Graph g = build_family(d);
      if (g.order() != n) throw Error(d.id + ": order bookkeeping is wrong");
      out.push_back({std::move(d), std::move(g)});
    }
  }
  return out;
}

std::optional<FamilyDescriptor> match_family(const Graph& g) {
  if (g.order() > 64 || !is_connected(g)) return std::nullopt;
  const CanonicalForm key = canonical_form(g);
  for (auto& inst : enumerate_family_instances(g.order())) {
    if (inst.graph.size() == g.size() && canonical_form(inst.graph) == key) return inst.desc;
  }
  return std::nullopt;
}

std::string format_params(const FamilyParams& params) {
  if (params.empty()) return "";
  std::string s = "(";
  for (const auto& [k, v] : params) {
    if (s.size() > 1) s += ",";
    s += k + "=" + std::to_string(v);
  }
  return s + ")";
}

}  // namespace qmain
