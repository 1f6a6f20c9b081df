#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowkit/dimension.hpp"
#include "chowkit/intmat.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/rng.hpp"

namespace ck {

// `count` blocks of n+1 variables u<i><j>, i = first..first+count-1, j = 0..n.
// Names switch to u<i>_<j> once an index needs two digits.
Vars u_blocks(std::size_t count, std::size_t n, std::size_t first = 0);
std::string u_name(std::size_t i, std::size_t j, std::size_t count, std::size_t n, std::size_t first = 0);

struct ChowForm {
  MPoly poly;
  std::vector<int> degrees;  // per u-block
  std::size_t bitsize = 0;
  std::string provenance;    // "ci" or "gcd-of-N"
  std::uint64_t seed = 0;
};

struct LambdaMatrix {
  IntMat lambda;  // (n-r) x m
  std::uint64_t seed = 0;
};

// Raise every polynomial to the maximal degree d by multiplying with all
// x_j^{d - deg f}.
ProjectiveVariety degree_equalize(const ProjectiveVariety& V);

// V must be cut out by exactly n - r polynomials and have pure dimension r.
ChowForm chow_form_ci(const ProjectiveVariety& V, int r, std::uint64_t seed = 0);

// N = ceil(m / (n-r)) matrices with dim V(Lambda_i f) <= r and stacked rank m.
// Expects equal degrees.
std::vector<LambdaMatrix> generic_lc(const ProjectiveVariety& V, int r, const RandomGrid& grid);

ChowForm chow_form(const ProjectiveVariety& V, int r, const RandomGrid& grid = {});

struct ChowBounds {
  mpz_class per_block;         // d^{n-r}
  mpz_class macaulay_dim;      // C((n-r)(d-1)+1+n, n)
  std::vector<mpz_class> bezout;  // per polynomial of the system f, U_0..U_r
};
ChowBounds chow_bounds(std::size_t n, int d, int r);
ChowBounds chow_bounds(const ProjectiveVariety& V, int r);

// plane is (r+1) x (n+1); row i fills block u_i.
mpz_class evaluate_on_plane(const ChowForm& cf, const IntMat& plane);

// Per-block degrees of a polynomial over a u-table; -1 for a block where the
// polynomial is not homogeneous.
std::vector<int> block_degrees(const MPoly& f);

}  // namespace ck
