#pragma once

#include <vector>

#include <gmpxx.h>

namespace ck {

struct LpResult {
  bool feasible = false;
  std::vector<mpq_class> x;
  mpq_class value;
};

// Exact two-phase simplex: minimize c.x subject to A x = b, x >= 0.
// Bland's rule; throws InternalError on an unbounded objective.
LpResult lp_minimize(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b,
                     const std::vector<mpq_class>& c);

}  // namespace ck
