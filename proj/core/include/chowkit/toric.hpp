#pragma once

#include <vector>

#include "chowkit/interp.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/resultant.hpp"

namespace ck {

// Polynomials multihomogeneous in the blocks of eliminated variables; one more
// polynomial than the dimension of the product of projective spaces.
struct MultiResSystem {
  std::vector<MPoly> polys;
  std::vector<std::vector<std::size_t>> blocks;
};

// Per polynomial, per block degrees; validates the system.
std::vector<std::vector<int>> multidegrees(const MultiResSystem& sys);

// Multihomogeneous Bezout count of all polynomials except the k-th, i.e. the
// degree of the resultant in the coefficients of polynomial k.
std::vector<long long> bezout_bounds(const MultiResSystem& sys);

// Multihomogeneous resultant over param_vars(vars, all eliminated variables),
// up to sign and integer content. Canny-Emiris matrices on a random lifting,
// quotient by the extraneous minor at each point, sparse interpolation.
// Polynomials without parameters are perturbed by s*g with random g.
MPoly resultant_multihomogeneous(const MultiResSystem& sys, const ResultantOptions& opt = {},
                                 InterpReport* report = nullptr);

// Whether the multihomogeneous resultant of a parameter-free system vanishes.
bool multihomogeneous_resultant_vanishes(const MultiResSystem& sys, std::uint64_t seed = 0);

// Size of the Canny-Emiris matrix for the system (number of lattice points).
std::size_t canny_emiris_dim(const MultiResSystem& sys);

}  // namespace ck
