#include "chowkit/lp.hpp"

#include "chowkit/errors.hpp"

namespace ck {

namespace {

struct Tableau {
  std::size_t m, n;  // constraints, columns (without rhs)
  std::vector<std::vector<mpq_class>> t;  // m rows of n+1 (last = rhs)
  std::vector<mpq_class> z;               // reduced costs, n+1 (last = -objective)
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    mpq_class p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      mpq_class f = t[i][c];
      for (std::size_t j = 0; j <= n; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    if (z[c] != 0) {
      mpq_class f = z[c];
      for (std::size_t j = 0; j <= n; ++j)
        if (t[r][j] != 0) z[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  void set_objective(const std::vector<mpq_class>& c) {
    z.assign(n + 1, 0);
    for (std::size_t j = 0; j < n && j < c.size(); ++j) z[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
      const mpq_class& cb = z[basis[i]];
      if (cb == 0) continue;
      mpq_class f = cb;
      for (std::size_t j = 0; j <= n; ++j)
        if (t[i][j] != 0) z[j] -= f * t[i][j];
    }
  }

  // Runs the simplex over columns < limit.
  void run(std::size_t limit) {
    for (;;) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < limit; ++j)
        if (z[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n) return;
      std::size_t leave = m;
      mpq_class best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        mpq_class ratio = t[i][n] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) throw InternalError("linear program is unbounded");
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b,
                     const std::vector<mpq_class>& c) {
  const std::size_t m = A.size();
  const std::size_t nv = c.size();
  if (b.size() != m) throw UsageError("lp shape mismatch");
  Tableau T{m, nv + m, {}, {}, {}};
  T.t.assign(m, std::vector<mpq_class>(nv + m + 1, 0));
  T.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != nv) throw UsageError("lp shape mismatch");
    int sg = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) T.t[i][j] = sg * A[i][j];
    T.t[i][nv + i] = 1;
    T.t[i][nv + m] = sg * b[i];
    T.basis[i] = nv + i;
  }
  // Phase 1: minimize the sum of artificials.
  std::vector<mpq_class> c1(nv + m, 0);
  for (std::size_t i = 0; i < m; ++i) c1[nv + i] = 1;
  T.set_objective(c1);
  T.run(nv + m);
  LpResult res;
  if (T.z[nv + m] != 0) return res;  // -objective != 0 means infeasible
  // Drive artificials out of the basis where possible; redundant rows stay.
  for (std::size_t i = 0; i < m; ++i) {
    if (T.basis[i] < nv) continue;
    for (std::size_t j = 0; j < nv; ++j)
      if (T.t[i][j] != 0) {
        T.pivot(i, j);
        break;
      }
  }
  T.set_objective(c);
  T.run(nv);
  res.feasible = true;
  res.x.assign(nv, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (T.basis[i] < nv) res.x[T.basis[i]] = T.t[i][nv + m];
  res.value = -T.z[nv + m];
  return res;
}

}  // namespace ck
