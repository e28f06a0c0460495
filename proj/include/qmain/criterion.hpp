#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "qmain/graph.hpp"

namespace qmain {

using Rational = boost::rational<std::int64_t>;

/// Outcome of solving a*d(v) + b = d(v)^2 + S(v) over all vertices.
struct AbSolution {
  enum class Kind { NoSolution, Unique, Underdetermined };
  Kind kind = Kind::NoSolution;
  Rational a{0};
  Rational b{0};
  bool integral = false;
  /// Common degree when kind == Underdetermined.
  int regular_degree = 0;
};

const char* to_string(AbSolution::Kind kind);

/// Requires a nonempty edge set.
AbSolution solve_ab(const Graph& g);

/// True iff solve_ab(g) has a unique solution.
bool has_exactly_two_q_mains(const Graph& g);

struct MembershipReport {
  std::vector<std::int64_t> residuals;  // d(v)^2 + S(v) - a*d(v) - b
  bool member = false;
};

MembershipReport check_membership(const Graph& g, std::int64_t a, std::int64_t b);

}  // namespace qmain
