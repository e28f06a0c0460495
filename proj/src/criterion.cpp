#include "qmain/criterion.hpp"

namespace qmain {

const char* to_string(AbSolution::Kind kind) {
  switch (kind) {
    case AbSolution::Kind::NoSolution: return "no_solution";
    case AbSolution::Kind::Unique: return "unique";
    case AbSolution::Kind::Underdetermined: return "underdetermined";
  }
  return "?";
}

AbSolution solve_ab(const Graph& g) {
  if (g.size() == 0) throw GraphError("empty edge set");
  const DegreeProfile p = degree_profile(g);
  const int n = g.order();
  AbSolution out;

  int other = -1;
  for (int v = 1; v < n && other < 0; ++v) {
    if (p.degree[v] != p.degree[0]) other = v;
  }
  if (other < 0) {
    out.kind = AbSolution::Kind::Underdetermined;
    out.regular_degree = p.degree[0];
    return out;
  }

  auto rhs = [&](int v) {
    return static_cast<std::int64_t>(p.degree[v]) * p.degree[v] + p.neighbor_degree_sum[v];
  };
  const std::int64_t d1 = p.degree[0], d2 = p.degree[other];
  const Rational a(rhs(0) - rhs(other), d1 - d2);
  const Rational b = Rational(rhs(0)) - a * d1;
  for (int v = 0; v < n; ++v) {
    if (a * p.degree[v] + b != Rational(rhs(v))) return out;
  }
  out.kind = AbSolution::Kind::Unique;
  out.a = a;
  out.b = b;
  out.integral = a.denominator() == 1 && b.denominator() == 1;
  return out;
}

bool has_exactly_two_q_mains(const Graph& g) { return solve_ab(g).kind == AbSolution::Kind::Unique; }

MembershipReport check_membership(const Graph& g, std::int64_t a, std::int64_t b) {
  const DegreeProfile p = degree_profile(g);
  MembershipReport out;
  out.member = true;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = p.degree[v];
    const std::int64_t r = d * d + p.neighbor_degree_sum[v] - a * d - b;
    out.residuals.push_back(r);
    if (r != 0) out.member = false;
  }
  return out;
}

}  // namespace qmain
