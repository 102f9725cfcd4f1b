#include "fractw/simplex.hpp"

#include "fractw/error.hpp"

namespace fractw {

SimplexResult solve_packing(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) fail(Errc::bad_params, "b length mismatch");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) fail(Errc::bad_params, "A row length mismatch");
  for (const auto& bi : b)
    if (bi < 0) fail(Errc::bad_params, "negative right-hand side");

  // Tableau: row 0 is the objective (reduced costs, negated), rows 1..m the
  // constraints. Columns 0..n-1 variables, n..n+m-1 slacks, last the rhs.
  const int cols = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols, Rational(0)));
  for (int j = 0; j < n; ++j) T[0][j] = -c[j];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i + 1][j] = A[i][j];
    T[i + 1][n + i] = 1;
    T[i + 1][cols - 1] = b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T[0][j] < 0) {
        enter = j;  // Bland: lowest index
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 1; i <= m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols - 1] / T[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i - 1] < basis[leave - 1])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) fail(Errc::bad_params, "unbounded program");
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave - 1] = enter;
  }

  SimplexResult res;
  res.value = T[0][cols - 1];
  res.primal.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.primal[basis[i]] = T[i + 1][cols - 1];
  res.dual.resize(m);
  for (int i = 0; i < m; ++i) res.dual[i] = T[0][n + i];
  return res;
}

}  // namespace fractw
