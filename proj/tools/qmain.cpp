// qmain: command-line front end.
//
//   qmain analyze [FILE] [--pretty]
//   qmain spectrum [FILE] [--exact-only]
//   qmain enumerate --n N [--m M] [--verify] [--jobs J] [--force] [--emit-positives PATH]
//   qmain family --list
//   qmain family --emit [--id ID] [--params K=V,..] [--max-n N] [--sidecar PATH]
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 a check failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "qmain/canonical.hpp"
#include "qmain/criterion.hpp"
#include "qmain/enumeration.hpp"
#include "qmain/families.hpp"
#include "qmain/graph6.hpp"
#include "qmain/invariants.hpp"
#include "qmain/spectral.hpp"
#include "qmain/structure.hpp"

using json = nlohmann::ordered_json;
using namespace qmain;

namespace {

constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json ab_json(const AbSolution& ab) {
  json j;
  j["kind"] = to_string(ab.kind);
  if (ab.kind == AbSolution::Kind::Unique) {
    j["a"] = rational_json(ab.a);
    j["b"] = rational_json(ab.b);
    j["integral"] = ab.integral;
  } else if (ab.kind == AbSolution::Kind::Underdetermined) {
    j["regular_degree"] = ab.regular_degree;
  }
  return j;
}

// Printed eigenvalues are rounded to 9 decimals; -0 becomes 0.
double rounded(double x) { return std::round(x * 1e9) / 1e9 + 0.0; }

json groups_json(const QSpectrumReport& qs) {
  json arr = json::array();
  for (const auto& g : qs.groups) {
    arr.push_back({{"value", rounded(g.value)}, {"multiplicity", g.multiplicity}, {"main", g.is_main}});
  }
  return arr;
}

json analyze_graph(const Graph& g) {
  json rec;
  rec["n"] = g.order();
  rec["m"] = g.size();
  const bool connected = is_connected(g);
  rec["connected"] = connected;
  const int c = connected ? cyclomatic_number(g) : -1;
  rec["cyclomatic_number"] = connected ? json(c) : json(nullptr);
  rec["regular"] = is_regular(g);

  std::optional<AbSolution> ab;
  if (connected && g.size() > 0) ab = solve_ab(g);
  rec["ab"] = ab ? ab_json(*ab) : json(nullptr);

  const QSpectrumReport qs = q_spectrum(g);
  rec["main_count"] = qs.exact_main_count;
  rec["spectrum"] = groups_json(qs);

  rec["base_shape"] = nullptr;
  if (connected && c == 3) {
    const BaseShape shape = classify_base(base(g).graph);
    rec["base_shape"] = {{"shape", shape.name()}, {"slot_lengths", shape.slot_lengths}};
  }

  rec["family"] = nullptr;
  if (connected) {
    if (auto fam = match_family(g)) rec["family"] = {{"id", fam->id}, {"params", fam->params}};
  }

  rec["lemmas"] = nullptr;
  if (ab && ab->kind == AbSolution::Kind::Unique && c >= 1) {
    json arr = json::array();
    for (const auto& check : check_lemmas(g, *ab)) {
      arr.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    rec["lemmas"] = arr;
  }
  return rec;
}

json spectrum_graph(const Graph& g, bool exact_only) {
  json rec;
  rec["n"] = g.order();
  if (exact_only) {
    rec["main_count"] = exact_main_count(g);
    return rec;
  }
  const QSpectrumReport qs = q_spectrum(g);
  rec["main_count"] = qs.exact_main_count;
  rec["groups"] = groups_json(qs);
  return rec;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Reads graph6 lines one at a time and prints one record per line.
template <typename Fn>
int for_each_line(const std::string& file, bool pretty, Fn fn) {
  std::ifstream in_file;
  std::istream* in = &std::cin;
  if (!file.empty() && file != "-") {
    in_file.open(file);
    if (!in_file) {
      std::cerr << "cannot open " << file << "\n";
      return kUsage;
    }
    in = &in_file;
  }
  std::string line;
  long lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty()) continue;
    json rec;
    rec["input"] = text;
    rec["line"] = lineno;
    try {
      const Graph g = graph6_decode(text);
      const json body = fn(g);
      for (auto& [k, v] : body.items()) rec[k] = v;
    } catch (const ParseError& e) {
      rec["error"] = e.what();
      rec["offset"] = e.offset();
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      rec["offset"] = nullptr;
    }
    std::cout << rec.dump(pretty ? 2 : -1) << "\n";
  }
  return 0;
}

FamilyParams parse_params(const std::string& text) {
  FamilyParams out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad parameter '" + item + "', expected K=V");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      const int v = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing characters");
      out[trim(item.substr(0, eq))] = v;
    } catch (const std::logic_error&) {
      throw UsageError("bad parameter value in '" + item + "'");
    }
  }
  return out;
}

json report_json(const EnumerationReport& r) {
  json j;
  j["n"] = r.n;
  j["connected_visited"] = r.connected_visited;
  j["tricyclic"] = r.tricyclic;
  j["pendant_free"] = r.pendant_free;
  j["positives_count"] = r.positives_count;
  j["family_instances"] = r.family_instances;
  j["float_checked"] = r.float_checked;
  json cycles = json::object();
  for (auto [k, v] : r.cycle_counts) cycles[std::to_string(k)] = v;
  j["cycle_counts"] = cycles;
  j["shapes"] = r.shapes;
  json pos = json::array();
  for (const auto& p : r.positives) {
    pos.push_back({{"graph6", p.graph6},
                   {"a", p.a},
                   {"b", p.b},
                   {"family", p.family},
                   {"shape", p.shape},
                   {"pendants", p.has_pendants}});
  }
  j["positives"] = pos;
  json viol = json::array();
  for (const auto& v : r.violations) viol.push_back({{"kind", v.kind}, {"graph6", v.graph6}, {"detail", v.detail}});
  j["violations"] = viol;
  j["ok"] = r.ok();
  return j;
}

int run_enumerate(int n, int m, bool verify, int jobs, bool force, const std::string& emit_path) {
  EnumerationOptions opts{jobs, force};
  if (!verify && emit_path.empty()) {
    if (m < 0) m = n + 2;
    for (const Graph& g : enumerate_connected(n, m, opts)) std::cout << graph6_encode(g) << "\n";
    return 0;
  }
  VerifyOptions vopts;
  vopts.enumeration = opts;
  const EnumerationReport report = verify_characterization(n, vopts);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) {
      std::cerr << "cannot write " << emit_path << "\n";
      return kUsage;
    }
    for (const auto& p : report.positives) out << p.graph6 << "\n";
  }
  if (verify) std::cout << report_json(report).dump(2) << "\n";
  for (const auto& v : report.violations) {
    std::cerr << "violation " << v.kind << ": " << v.graph6 << " " << v.detail << "\n";
  }
  return report.ok() ? 0 : kCheckFailed;
}

int run_family_list() {
  for (const auto& f : family_catalog()) {
    std::cout << f.id << "\tT" << f.shape << "\t" << f.a << "\t" << f.b << "\t"
              << (f.has_pendants ? "pendants" : "pendant-free");
    if (!f.param_names.empty()) {
      std::cout << "\tparams";
      for (const auto& p : f.param_names) std::cout << " " << p;
      std::cout << "\tminimal " << format_params(f.minimal_params);
    }
    std::cout << "\n";
  }
  return 0;
}

int run_family_emit(const std::string& id, const std::string& params_text, int max_n, const std::string& sidecar_path) {
  std::vector<std::string> ids;
  if (id.empty()) {
    if (!params_text.empty()) throw UsageError("--params needs --id");
    for (const auto& f : family_catalog()) ids.push_back(f.id);
  } else {
    family_info(id);  // validates the id
    ids.push_back(id);
  }

  std::vector<FamilyDescriptor> descs;
  if (!params_text.empty()) {
    descs.push_back(describe_family(id, parse_params(params_text)));
  } else if (max_n > 0) {
    for (int n = 1; n <= max_n; ++n) {
      for (auto& inst : enumerate_family_instances(n)) {
        if (std::find(ids.begin(), ids.end(), inst.desc.id) != ids.end()) descs.push_back(inst.desc);
      }
    }
  } else {
    for (const auto& fid : ids) descs.push_back(describe_family(fid, family_info(fid).minimal_params));
  }

  std::ofstream side_file;
  std::ostream* side = &std::cerr;
  if (!sidecar_path.empty()) {
    side_file.open(sidecar_path);
    if (!side_file) {
      std::cerr << "cannot write " << sidecar_path << "\n";
      return kUsage;
    }
    side = &side_file;
  }
  for (const auto& d : descs) {
    Graph g;
    try {
      g = build_family(d);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return kCheckFailed;
    }
    std::cout << graph6_encode(g) << "\n";
    json rec = {{"id", d.id}, {"params", d.params}, {"a", d.a}, {"b", d.b}, {"n", g.order()}, {"m", g.size()}};
    *side << rec.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless Laplacian main eigenvalues and tricyclic graph families"};
  app.require_subcommand(1);

  std::string file;
  bool pretty = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze graph6 lines (file or stdin) as JSON lines");
  analyze->add_option("file", file, "Input file, '-' or omitted for stdin");
  analyze->add_flag("--pretty", pretty, "Indent JSON output");

  bool exact_only = false;
  auto* spectrum = app.add_subcommand("spectrum", "Q-spectrum with main flags");
  spectrum->add_option("file", file, "Input file, '-' or omitted for stdin");
  spectrum->add_flag("--exact-only", exact_only, "Only the exact main count");

  int n = 0, m = -1, jobs = 1;
  bool verify = false, force = false;
  std::string emit_positives;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate connected graphs of order n");
  enumerate->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--m", m, "Edge count (default n+2)");
  enumerate->add_flag("--verify", verify, "Run the cross-checks on the tricyclic graphs and print a report");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--force", force, "Ignore the order guard");
  enumerate->add_option("--emit-positives", emit_positives, "Write graph6 of graphs with two main eigenvalues");

  bool list = false, emit = false;
  std::string id, params_text, sidecar;
  int max_n = 0;
  auto* family = app.add_subcommand("family", "Family atlas");
  family->add_flag("--list", list, "Print the family table");
  family->add_flag("--emit", emit, "Emit graph6 of family members");
  family->add_option("--id", id, "Family id, e.g. G3");
  family->add_option("--params", params_text, "Parameters, e.g. k=2 or a=8,b=-3");
  family->add_option("--max-n", max_n, "Emit every member with at most this many vertices");
  family->add_option("--sidecar", sidecar, "JSON-lines sidecar path (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) return for_each_line(file, pretty, analyze_graph);
    if (spectrum->parsed()) {
      return for_each_line(file, false, [&](const Graph& g) { return spectrum_graph(g, exact_only); });
    }
    if (enumerate->parsed()) return run_enumerate(n, m, verify, jobs, force, emit_positives);
    if (family->parsed()) {
      if (list == emit) throw UsageError("choose exactly one of --list and --emit");
      if (list) return run_family_list();
      return run_family_emit(id, params_text, max_n, sidecar);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
