#include "polarfix/lp.hpp"

#include <cmath>
#include <vector>

#include "polarfix/errors.hpp"

namespace polarfix {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 200000;

/* Dense tableau for  max c.z  s.t.  T z = rhs, z >= 0  with a starting basis
 * of identity columns.  Bland's rule on both the entering and leaving choice,
 * which trades speed for guaranteed termination; fine at desk scale. */
struct Tableau {
  int m, cols;
  std::vector<std::vector<double>> t;  // m rows of [cols | rhs]
  std::vector<double> obj;             // reduced costs [cols | value]
  std::vector<int> basis;

  Tableau(int m_, int cols_) : m(m_), cols(cols_) {
    t.assign(m, std::vector<double>(cols + 1, 0.0));
    obj.assign(cols + 1, 0.0);
    basis.assign(m, -1);
  }

  void pivot(int row, int col) {
    double p = t[row][col];
    for (int j = 0; j <= cols; ++j) t[row][j] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      double f = t[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) t[r][j] -= f * t[row][j];
    }
    double f = obj[col];
    if (f != 0.0)
      for (int j = 0; j <= cols; ++j) obj[j] -= f * t[row][j];
    basis[row] = col;
  }

  /* Runs Bland's rule to optimality.  Returns false when an entering column
   * admits no leaving row (unbounded objective). */
  bool solve() {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (obj[j] > kPivotEps) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= kPivotEps) continue;
        double ratio = t[r][cols] / t[r][enter];
        if (leave < 0 || ratio < best - 1e-15 ||
            (std::fabs(ratio - best) <= 1e-15 && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error("simplex: pivot limit exceeded");
  }
};

}  // namespace

LpResult maximize_under_unit_rows(const Vector& c, const std::vector<Vector>& rows) {
  if (rows.empty()) throw BadParams("lp: no rows");
  int n = static_cast<int>(c.size());
  int m = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw DimensionMismatch("lp: row length mismatch");

  /* x = u - w with u, w >= 0, slack per row.  Columns: u(0..n-1), w(n..2n-1),
   * slacks (2n..2n+m-1). */
  Tableau tab(m, 2 * n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tab.t[i][j] = rows[i][static_cast<size_t>(j)];
      tab.t[i][n + j] = -rows[i][static_cast<size_t>(j)];
    }
    tab.t[i][2 * n + i] = 1.0;
    tab.t[i][tab.cols] = 1.0;
    tab.basis[i] = 2 * n + i;
  }
  for (int j = 0; j < n; ++j) {
    tab.obj[j] = c[static_cast<size_t>(j)];
    tab.obj[n + j] = -c[static_cast<size_t>(j)];
  }

  if (!tab.solve()) throw UnboundedLp("lp_support: unbounded objective");

  LpResult res;
  res.value = -tab.obj[tab.cols];
  res.x = zero_vector(n);
  for (int r = 0; r < m; ++r) {
    int b = tab.basis[r];
    if (b < n)
      res.x[static_cast<size_t>(b)] += tab.t[r][tab.cols];
    else if (b < 2 * n)
      res.x[static_cast<size_t>(b - n)] -= tab.t[r][tab.cols];
  }
  return res;
}

double cone_infeasibility(const Vector& x, const std::vector<Vector>& generators) {
  if (generators.empty()) throw BadParams("cone_infeasibility: no generators");
  int n = static_cast<int>(x.size());
  int k = static_cast<int>(generators.size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n)
      throw DimensionMismatch("cone_infeasibility: generator length mismatch");

  /* Equality rows sign-flipped so the artificial basis starts feasible.
   * Minimizing sum(a) is run as max -sum(a). */
  Tableau tab(n, k + n);
  for (int i = 0; i < n; ++i) {
    double s = x[static_cast<size_t>(i)] >= 0.0 ? 1.0 : -1.0;
    for (int j = 0; j < k; ++j) tab.t[i][j] = s * generators[static_cast<size_t>(j)][static_cast<size_t>(i)];
    tab.t[i][k + i] = 1.0;
    tab.t[i][tab.cols] = s * x[static_cast<size_t>(i)];
    tab.basis[i] = k + i;
  }
  /* Reduced costs for max -sum(a) with the artificials basic: price out each
   * row once. */
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= tab.cols; ++j) tab.obj[j] += tab.t[i][j];
  for (int i = 0; i < n; ++i) tab.obj[k + i] = 0.0;

  if (!tab.solve()) throw Error("cone_infeasibility: phase-1 cannot be unbounded");
  double opt = tab.obj[tab.cols];
  return opt < 0.0 ? 0.0 : opt;
}

}  // namespace polarfix
