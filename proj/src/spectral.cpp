#include "qmain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmain {

QMatrix signless_laplacian(const Graph& g) {
  QMatrix q;
  q.n = g.order();
  q.entries.assign(static_cast<std::size_t>(q.n) * q.n, 0);
  for (int v = 0; v < q.n; ++v) {
    q.entries[static_cast<std::size_t>(v) * q.n + v] = g.degree(v);
    for (int w : g.neighbors(v)) q.entries[static_cast<std::size_t>(v) * q.n + w] = 1;
  }
  return q;
}

namespace {

std::vector<BigInt> apply_q(const Graph& g, const std::vector<int>& deg, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(x.size());
  for (int v = 0; v < g.order(); ++v) {
    BigInt s = deg[v] * x[v];
    for (int w : g.neighbors(v)) s += x[w];
    y[v] = std::move(s);
  }
  return y;
}

// Incremental Bareiss: keeps the reduced columns seen so far and reports
// whether a new column is independent of them.
class RankBuilder {
 public:
  explicit RankBuilder(int rows) : rows_(rows) {}

  bool add(std::vector<BigInt> col) {
    // Replay the elimination steps recorded so far on the new column.
    BigInt prev = 1;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const int pr = pivot_rows_[k];
      const auto& pcol = pivots_[k];
      const BigInt& p = pcol[pr];
      const BigInt f = col[pr];
      for (int r = 0; r < rows_; ++r) {
        if (pivot_step_[r] <= static_cast<int>(k)) continue;
        col[r] = (p * col[r] - f * pcol[r]) / prev;
      }
      prev = p;
    }
    int pivot = -1;
    for (int r = 0; r < rows_; ++r) {
      if (pivot_step_[r] == kFree && col[r] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    pivot_step_[pivot] = static_cast<int>(pivots_.size());
    pivot_rows_.push_back(pivot);
    pivots_.push_back(std::move(col));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  int rows_;
  std::vector<std::vector<BigInt>> pivots_;
  std::vector<int> pivot_rows_;
  static constexpr int kFree = 1 << 30;
  // Step at which each row became a pivot row.
  std::vector<int> pivot_step_ = std::vector<int>(static_cast<std::size_t>(rows_), kFree);
};

}  // namespace

std::vector<std::vector<BigInt>> walk_columns(const Graph& g, int cols) {
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  std::vector<std::vector<BigInt>> out;
  if (cols <= 0) return out;
  out.emplace_back(g.order(), BigInt(1));
  for (int k = 1; k < cols; ++k) out.push_back(apply_q(g, deg, out.back()));
  return out;
}

int bareiss_rank(std::vector<std::vector<BigInt>> columns) {
  if (columns.empty()) return 0;
  const int rows = static_cast<int>(columns.front().size());
  const int cols = static_cast<int>(columns.size());
  // Work on the transpose view: eliminate column by column, pivoting on rows.
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (columns[c][r] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (auto& col : columns) std::swap(col[pivot], col[rank]);
    }
    const BigInt p = columns[c][rank];
    for (int c2 = c + 1; c2 < cols; ++c2) {
      const BigInt f = columns[c2][rank];
      for (int r = rank + 1; r < rows; ++r) {
        columns[c2][r] = (p * columns[c2][r] - f * columns[c][r]) / prev;
      }
      columns[c2][rank] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int exact_main_count(const Graph& g) {
  if (g.order() == 0) throw GraphError("empty graph");
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  RankBuilder builder(g.order());
  std::vector<BigInt> col(g.order(), BigInt(1));
  // Krylov property: once Q^k j depends on earlier columns, so do all later ones.
  while (builder.rank() < g.order()) {
    std::vector<BigInt> next = apply_q(g, deg, col);
    if (!builder.add(col)) break;
    col = std::move(next);
  }
  return builder.rank();
}

int walk_matrix_rank(const Graph& g) { return bareiss_rank(walk_columns(g, g.order())); }

Eigensystem jacobi_eigensystem(std::vector<double> a, int n, int max_sweeps) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double target = 1e-12 * std::max(frob, 1e-300);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  Eigensystem out;
  double off = off_norm();
  int sweep = 0;
  while (off > target) {
    if (sweep == max_sweeps) {
      throw ConvergenceError("Jacobi did not converge; off-diagonal norm " + std::to_string(off), off);
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double& vkp = v[static_cast<std::size_t>(k) * n + p];
          double& vkq = v[static_cast<std::size_t>(k) * n + q];
          const double x = vkp, y = vkq;
          vkp = c * x - s * y;
          vkq = s * x + c * y;
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return at(i, i) > at(j, j); });
  for (int idx : order) {
    out.values.push_back(at(idx, idx));
    std::vector<double> vec(n);
    for (int k = 0; k < n; ++k) vec[k] = v[static_cast<std::size_t>(k) * n + idx];
    out.vectors.push_back(std::move(vec));
  }
  out.sweeps = sweep;
  out.off_norm = off;
  return out;
}

double default_group_tolerance(const Graph& g) {
  int max_row = 0;
  for (int v = 0; v < g.order(); ++v) max_row = std::max(max_row, 2 * g.degree(v));
  return 1e-7 * std::max(1.0, static_cast<double>(max_row));
}

int QSpectrumReport::float_main_count() const {
  return static_cast<int>(std::count_if(groups.begin(), groups.end(), [](const EigenGroup& e) { return e.is_main; }));
}

QSpectrumReport q_spectrum(const Graph& g, std::optional<double> group_tol) {
  const double tol = group_tol.value_or(default_group_tolerance(g));
  if (!(tol > 0.0)) throw Error("group tolerance must be positive");
  const int n = g.order();
  const QMatrix q = signless_laplacian(g);
  std::vector<double> dense(q.entries.begin(), q.entries.end());
  const Eigensystem es = jacobi_eigensystem(std::move(dense), n);

  QSpectrumReport report;
  report.n = n;
  const double main_threshold = 1e-6 * std::sqrt(static_cast<double>(n));
  std::size_t k = 0;
  while (k < es.values.size()) {
    std::size_t end = k + 1;
    while (end < es.values.size() && es.values[end - 1] - es.values[end] <= tol) ++end;
    EigenGroup group;
    double sum = 0.0;
    for (std::size_t i = k; i < end; ++i) {
      sum += es.values[i];
      const double dot = std::accumulate(es.vectors[i].begin(), es.vectors[i].end(), 0.0);
      group.projection_sq += dot * dot;
    }
    group.multiplicity = static_cast<int>(end - k);
    group.value = sum / group.multiplicity;
    group.is_main = std::sqrt(group.projection_sq) > main_threshold;
    report.groups.push_back(group);
    k = end;
  }
  report.exact_main_count = exact_main_count(g);
  return report;
}

}  // namespace qmain
