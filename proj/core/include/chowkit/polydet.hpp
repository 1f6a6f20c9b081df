#pragma once

#include <string>
#include <vector>

#include "chowkit/intmat.hpp"
#include "chowkit/kronecker.hpp"
#include "chowkit/mpoly.hpp"

namespace ck {

// Square matrix with MPoly entries over one shared table.
class PolyMatrix {
public:
  PolyMatrix(Vars vars, std::size_t dim);
  PolyMatrix(Vars vars, std::size_t dim, std::vector<MPoly> entries);

  std::size_t dim() const noexcept { return dim_; }
  const Vars& vars() const noexcept { return vars_; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, MPoly p);
  IntMat evaluate(const std::vector<mpz_class>& point) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& idx) const;  // principal
  std::string to_string() const;

private:
  Vars vars_;
  std::size_t dim_;
  std::vector<MPoly> e_;
};

// Laplace expansion; dim <= 6.
MPoly det_cofactor(const PolyMatrix& m);
// Kronecker packing, integer evaluation at 0, +-1, ..., Bareiss per point,
// Lagrange interpolation, one verification point, unpacking.
MPoly det_kronecker(const PolyMatrix& m, const KroneckerCaps& caps);
// Single-variable matrix with determinant degree <= D.
MPoly det_univariate_interp(const PolyMatrix& m, int D);
// Default caps m * (max partial degree over entries) per variable.
KroneckerCaps default_det_caps(const PolyMatrix& m);

}  // namespace ck
