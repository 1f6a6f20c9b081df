#pragma once

#include <cstdint>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/interp.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/polydet.hpp"

namespace ck {

// n+1 polynomials, homogeneous in the eliminated variables x0..xn, whose
// coefficients are polynomials in the remaining (parameter) variables.
struct MacaulaySystem {
  std::vector<MPoly> polys;
  std::vector<std::size_t> elim_vars;
};

struct ResultantOptions {
  std::uint64_t seed = 0;
  int retries = 3;
  InterpStrategy strategy = InterpStrategy::automatic;
};

// Parameter table of a system: the non-eliminated variables, in table order,
// with the original blocks restricted to them. Resultants live over it.
Vars param_vars(const Vars& vars, const std::vector<std::size_t>& elim);

// Degrees d_i of the polynomials in the eliminated variables; throws
// UsageError unless the system is square, homogeneous and has all d_i >= 1.
std::vector<int> elim_degrees(const MacaulaySystem& sys);

struct MacaulayMatrices {
  PolyMatrix M;
  PolyMatrix M0;
  std::vector<ExpVec> monomials;   // column (and row) monomials, degree t
  std::vector<std::size_t> row_poly;
  std::vector<std::size_t> m0_index;
  int critical_degree = 0;
};

// Entries live over param_vars(sys).
MacaulayMatrices macaulay_matrix(const MacaulaySystem& sys);

// det M0 vanishes identically; use gcp_resultant instead.
struct DegenerateQuotient : PreconditionError {
  DegenerateQuotient() : PreconditionError("extraneous minor vanishes identically; use the perturbed resultant") {}
};

MPoly resultant_dense(const MacaulaySystem& sys, const ResultantOptions& opt = {});

// Lowest nonvanishing s-coefficient of Res(f_i + s x_i^{d_i}) where only the
// polynomials listed in `perturb` are perturbed (x index taken mod n+1).
MPoly gcp_resultant(const MacaulaySystem& sys, const std::vector<std::size_t>& perturb,
                    const ResultantOptions& opt = {}, InterpReport* report = nullptr);
// All polynomials perturbed.
MPoly gcp_resultant(const MacaulaySystem& sys, const ResultantOptions& opt = {});

// Whether a parameter-free system has a common projective zero, i.e. whether
// its resultant vanishes (decided exactly through the perturbed resultant).
bool resultant_vanishes(const MacaulaySystem& sys);

// M_k = product of the degrees of all polynomials except the k-th.
std::vector<long long> bezout_bounds(const MacaulaySystem& sys);

}  // namespace ck
