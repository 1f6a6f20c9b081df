#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "chowkit/upoly.hpp"

namespace ck {

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  IntMat submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;
};

// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
mpz_class det_bareiss(IntMat m);
std::size_t rank(IntMat m);
// Basis of the rational kernel {v : m v = 0}, each vector primitive.
std::vector<std::vector<mpz_class>> nullspace(const IntMat& m);
// det(A + s B) as a polynomial in s; `max_deg` bounds its degree
// (the number of nonzero rows of B suffices).
UPoly pencil_det(const IntMat& A, const IntMat& B, std::size_t max_deg);

}  // namespace ck
