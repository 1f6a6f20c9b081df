#pragma once

#include <cstdint>
#include <vector>

#include "chowkit/chow.hpp"

namespace ck {

// Same layout as a Chow form, over the r u-blocks u1..ur.
using HurwitzForm = ChowForm;

// Res({f, U_1..U_r, M}, x) over the table (u1..ur, m0..mn) with M = sum m_j x_j.
// Requires a complete intersection of degree >= 2.
MPoly u_resultant(const ProjectiveVariety& V, int r, std::uint64_t seed = 0);

enum class DiscriminantMode {
  perturbed,  // lowest coefficient of the perturbed resultant, never zero
  plain,      // the resultant itself; zero when the partials share a root
};

// Resultant of the partial derivatives of R1 with respect to the variables
// m_vars, over the remaining variables of R1's table.
MPoly discriminant_via_partials(const MPoly& R1, const std::vector<std::size_t>& m_vars,
                                DiscriminantMode mode = DiscriminantMode::perturbed, std::uint64_t seed = 0);

// Square-free discriminant, stripped of factors shared with the incidence
// resultant, then checked on constructed tangent and random planes.
HurwitzForm hurwitz_form(const ProjectiveVariety& V, int r, const RandomGrid& grid = {});

// Degree of a complete intersection: product of the degrees.
long long ci_degree(const ProjectiveVariety& V);

// A u-configuration (r rows) whose plane meets V at a smooth rational point p
// and contains a tangent direction there; empty when no point is found in a
// small box.
std::vector<IntMat> tangent_planes(const ProjectiveVariety& V, int r, std::size_t count, Rng& rng);
// Rational points of V with coordinates in [-h, h], up to `limit` of them.
std::vector<std::vector<mpz_class>> small_points(const ProjectiveVariety& V, int h, std::size_t limit);

}  // namespace ck
