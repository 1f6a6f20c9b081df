#pragma once

#include <map>
#include <vector>

#include "chowkit/mpoly.hpp"
#include "chowkit/rng.hpp"

namespace ck {

// V(polys) in the projective space on the variables `x`.
struct ProjectiveVariety {
  std::vector<MPoly> polys;
  std::vector<std::size_t> x;
  int dim = -1;  // -1 when unknown
  std::size_t n() const { return x.size() - 1; }
};

// V(polys) in the product of projective spaces on the variable blocks.
struct MultiprojVariety {
  std::vector<MPoly> polys;
  std::vector<std::vector<std::size_t>> blocks;
  int dim = -1;
  std::vector<int> block_dims() const;  // n_i
  int ambient_dim() const;              // |n|
};

// Monte Carlo, one-sided: a true answer is always right, a false answer is
// wrong only on an unlucky draw. Majority over grid.retries trials.
bool has_projective_zero(const ProjectiveVariety& V, const RandomGrid& grid);
bool has_multiprojective_zero(const MultiprojVariety& V, const RandomGrid& grid);

// dim V <= r: V together with r+1 random linear forms has no zero.
bool dim_leq(const ProjectiveVariety& V, int r, const RandomGrid& grid);
// Smallest r with dim_leq(V, r); -1 for the empty variety.
int projective_dimension(const ProjectiveVariety& V, const RandomGrid& grid);

// Dimension of the projection of V onto the blocks in `I` (0-based, nonempty);
// -1 when V is empty.
int dim_projection(const MultiprojVariety& V, const std::vector<std::size_t>& I, const RandomGrid& grid);

// Subset bitmask (bit i = block i) -> dim of the projection, all nonempty subsets.
using DimTable = std::map<unsigned, int>;
DimTable dim_table(const MultiprojVariety& V, const RandomGrid& grid);

// Random homogeneous form of the given degree in `vars`, coefficients in [-B, B].
MPoly random_form(const Vars& table, const std::vector<std::size_t>& vars, int degree, Rng& rng, std::int64_t B);
// Random multihomogeneous form; deg[b] is the degree in blocks[b].
MPoly random_multiform(const Vars& table, const std::vector<std::vector<std::size_t>>& blocks,
                       const std::vector<int>& deg, Rng& rng, std::int64_t B);

}  // namespace ck
