#pragma once

// Shared machinery for resultant matrices whose rows are monomial multiples
// of the input polynomials (Macaulay and Canny-Emiris matrices).

#include <optional>
#include <vector>

#include "chowkit/interp.hpp"
#include "chowkit/intmat.hpp"
#include "chowkit/mpoly.hpp"

namespace ck::detail {

// A polynomial split into x-monomials ("slots") and parameter coefficients.
struct SplitPoly {
  std::vector<ExpVec> mons;   // exponents in the eliminated variables
  std::vector<MPoly> coeffs;  // over the parameter table; may be zero
  int slot(const ExpVec& e) const;
  void ensure(const ExpVec& e, const Vars& params);
};

// Parameter table: all non-eliminated variables, keeping their block structure.
struct ParamSplit {
  Vars params;
  std::vector<std::size_t> to_param;  // original index -> parameter index (SIZE_MAX for x)
};
ParamSplit split_params(const Vars& vars, const std::vector<std::size_t>& elim);
SplitPoly split_poly(const MPoly& f, const std::vector<std::size_t>& elim, const ParamSplit& ps);

struct MatrixLayout {
  std::size_t dim = 0;
  std::vector<std::size_t> row_poly;
  // per row: (column, slot of row_poly)
  std::vector<std::vector<std::pair<std::size_t, int>>> rows;
  std::vector<std::size_t> m0;  // principal index set of the extraneous minor
};

class QuotientNotExact : public InternalError {
public:
  QuotientNotExact() : InternalError("determinant quotient is not exact") {}
};

// Oracle for det(M + sG) / det(M0 + sG0) at parameter points.
class LayoutOracle : public SeriesOracle {
public:
  LayoutOracle(const MatrixLayout& lay, const std::vector<SplitPoly>& polys,
               std::vector<std::vector<mpz_class>> perturb);
  std::optional<UPoly> series(const std::vector<mpz_class>& pt) override;
  std::optional<mpz_class> value(const std::vector<mpz_class>& pt) override;
  // det M0 at a point (1 when M0 is empty).
  mpz_class minor_det(const std::vector<mpz_class>& pt);

private:
  void fill(const std::vector<mpz_class>& pt, IntMat& M, IntMat* G);
  const MatrixLayout& lay_;
  const std::vector<SplitPoly>& polys_;
  std::vector<std::vector<mpz_class>> pert_;  // per poly, per slot; empty if unperturbed
  std::size_t pert_rows_ = 0, pert_rows0_ = 0;
};

// Degree blocks for interpolating a resultant: `mk[i]` is the degree of the
// resultant in the coefficients of polynomial i.
std::vector<ParamBlock> resultant_blocks(const Vars& params, const std::vector<SplitPoly>& polys,
                                         const std::vector<long long>& mk, const std::vector<bool>& perturbed);

}  // namespace ck::detail
