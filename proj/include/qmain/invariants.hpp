#pragma once

#include <string>
#include <vector>

#include "qmain/criterion.hpp"
#include "qmain/graph.hpp"

namespace qmain {

struct LemmaCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation, empty when passed
};

/// Structural consequences that every graph with a unique integral (a,b)
/// must satisfy. Meant for connected graphs containing a cycle with
/// solve_ab(g).kind == Unique.
std::vector<LemmaCheck> check_lemmas(const Graph& g, const AbSolution& ab);

bool all_passed(const std::vector<LemmaCheck>& checks);

}  // namespace qmain
