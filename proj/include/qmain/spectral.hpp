#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmain/graph.hpp"

namespace qmain {

using BigInt = boost::multiprecision::cpp_int;

/// Dense symmetric integer matrix, row-major.
struct QMatrix {
  int n = 0;
  std::vector<std::int64_t> entries;
  std::int64_t operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

/// Q = D + A.
QMatrix signless_laplacian(const Graph& g);

/// Columns j, Qj, ..., Q^{cols-1} j as exact integers; result[k] is column k.
std::vector<std::vector<BigInt>> walk_columns(const Graph& g, int cols);

/// Rank over the rationals of the matrix whose columns are given, by
/// fraction-free (Bareiss) elimination.
int bareiss_rank(std::vector<std::vector<BigInt>> columns);

/// Number of Q-main eigenvalues: the rank of the walk matrix. Stops at the
/// first Krylov column that depends on the previous ones.
int exact_main_count(const Graph& g);

/// Same quantity from the full n-column walk matrix (slower; used to
/// cross-check the early exit).
int walk_matrix_rank(const Graph& g);

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_norm) : Error(what), off_norm_(off_norm) {}
  double off_diagonal_norm() const noexcept { return off_norm_; }

 private:
  double off_norm_;
};

struct Eigensystem {
  std::vector<double> values;                 // descending
  std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
  int sweeps = 0;
  double off_norm = 0.0;
};

/// Cyclic Jacobi on a dense symmetric matrix (row-major, size n*n).
Eigensystem jacobi_eigensystem(std::vector<double> a, int n, int max_sweeps = 100);

struct EigenGroup {
  double value = 0.0;
  int multiplicity = 0;
  /// Squared norm of the projection of the all-ones vector.
  double projection_sq = 0.0;
  bool is_main = false;
};

struct QSpectrumReport {
  int n = 0;
  std::vector<EigenGroup> groups;  // descending by value
  int exact_main_count = 0;
  int float_main_count() const;
};

double default_group_tolerance(const Graph& g);

QSpectrumReport q_spectrum(const Graph& g, std::optional<double> group_tol = std::nullopt);

}  // namespace qmain
