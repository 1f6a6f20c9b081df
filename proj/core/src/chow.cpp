#include "chowkit/chow.hpp"

#include <algorithm>

#include "chowkit/errors.hpp"
#include "chowkit/gcd.hpp"
#include "chowkit/resultant.hpp"

namespace ck {

namespace {

void check_projective(const ProjectiveVariety& V, int r) {
  if (V.x.empty()) throw UsageError("no projective variables");
  if (r < 0 || static_cast<std::size_t>(r) >= V.n()) throw UsageError("dimension out of range");
  for (const auto& f : V.polys) {
    if (f.is_zero()) throw UsageError("zero polynomial");
    if (!is_homogeneous_in(f, V.x)) throw UsageError("polynomial not homogeneous");
    if (degree_in(f, V.x) < 1) throw PreconditionError("constant polynomial: the variety is empty");
  }
}

// Table with the x variables of V first, then r+1 u-blocks; returns the
// polynomials moved into it.
std::pair<Vars, std::vector<MPoly>> with_u_blocks(const ProjectiveVariety& V, std::size_t nblocks,
                                                  std::size_t first) {
  const Vars& T = V.polys.at(0).vars();
  const std::size_t n1 = V.x.size();
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks(1);
  for (std::size_t k = 0; k < n1; ++k) {
    names.push_back(T->name(V.x[k]));
    blocks[0].push_back(k);
  }
  for (std::size_t i = 0; i < nblocks; ++i) {
    blocks.emplace_back();
    for (std::size_t j = 0; j < n1; ++j) {
      names.push_back(u_name(first + i, j, nblocks, n1 - 1, first));
      if (std::count(names.begin(), names.end() - 1, names.back())) throw UsageError("variable name clashes with " + names.back());
      blocks.back().push_back(names.size() - 1);
    }
  }
  Vars S = make_vars(names, blocks);
  std::vector<std::size_t> map(T->size(), SIZE_MAX);
  for (std::size_t k = 0; k < n1; ++k) map[V.x[k]] = k;
  std::vector<MPoly> out;
  for (const auto& f : V.polys) out.push_back(remap(f, S, map));
  return {S, out};
}

MPoly linear_form(const Vars& S, std::size_t ublock, std::size_t n1) {
  MPoly U(S);
  for (std::size_t j = 0; j < n1; ++j)
    U = U + MPoly::variable(S, S->block(ublock)[j]) * MPoly::variable(S, j);
  return U;
}

ChowForm finish(MPoly R, const std::string& provenance, std::uint64_t seed) {
  ChowForm cf;
  cf.poly = normalize(square_free_part(R));
  cf.degrees = block_degrees(cf.poly);
  cf.bitsize = bitsize(cf.poly);
  cf.provenance = provenance;
  cf.seed = seed;
  return cf;
}

}  // namespace

std::string u_name(std::size_t i, std::size_t j, std::size_t count, std::size_t n, std::size_t first) {
  if (first + count > 10 || n + 1 > 10) return "u" + std::to_string(i) + "_" + std::to_string(j);
  return "u" + std::to_string(i) + std::to_string(j);
}

Vars u_blocks(std::size_t count, std::size_t n, std::size_t first) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < count; ++i) {
    blocks.emplace_back();
    for (std::size_t j = 0; j <= n; ++j) {
      names.push_back(u_name(first + i, j, count, n, first));
      blocks.back().push_back(names.size() - 1);
    }
  }
  return make_vars(names, blocks);
}

std::vector<int> block_degrees(const MPoly& f) {
  std::vector<int> out;
  for (const auto& b : f.vars()->blocks()) out.push_back(is_homogeneous_in(f, b) ? degree_in(f, b) : -1);
  return out;
}

ProjectiveVariety degree_equalize(const ProjectiveVariety& V) {
  int d = 0;
  for (const auto& f : V.polys) d = std::max(d, degree_in(f, V.x));
  ProjectiveVariety out{{}, V.x, V.dim};
  for (const auto& f : V.polys) {
    const int e = d - degree_in(f, V.x);
    if (e == 0) {
      out.polys.push_back(f);
      continue;
    }
    for (auto xj : V.x) out.polys.push_back(mul(pow(MPoly::variable(f.vars(), xj), e), f));
  }
  return out;
}

ChowForm chow_form_ci(const ProjectiveVariety& V, int r, std::uint64_t seed) {
  check_projective(V, r);
  const std::size_t n = V.n();
  if (V.polys.size() != n - r) throw UsageError("complete intersection needs n - r polynomials");
  auto [S, polys] = with_u_blocks(V, r + 1, 0);
  MacaulaySystem sys;
  sys.polys = polys;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(r); ++i) sys.polys.push_back(linear_form(S, i + 1, n + 1));
  for (std::size_t k = 0; k <= n; ++k) sys.elim_vars.push_back(k);
  std::vector<std::size_t> perturb(polys.size());
  for (std::size_t i = 0; i < perturb.size(); ++i) perturb[i] = i;
  ResultantOptions opt;
  opt.seed = seed;
  MPoly R;
  try {
    R = gcp_resultant(sys, perturb, opt);
  } catch (const InternalError&) {
    throw PreconditionError("not a complete intersection of expected dimension");
  }
  return finish(R, "ci", seed);
}

std::vector<LambdaMatrix> generic_lc(const ProjectiveVariety& V, int r, const RandomGrid& grid) {
  check_projective(V, r);
  const std::size_t m = V.polys.size(), c = V.n() - r;
  if (m < c) throw PreconditionError("fewer polynomials than the codimension");
  int d = degree_in(V.polys[0], V.x);
  for (const auto& f : V.polys)
    if (degree_in(f, V.x) != d) throw UsageError("degrees are not equalized");
  const std::size_t N = (m + c - 1) / c;

  // S = [N c d^{c-1} + m + 1], capped by the grid bound.
  mpz_class S;
  mpz_ui_pow_ui(S.get_mpz_t(), d, c - 1);
  S = S * N * c + m + 1;
  const std::int64_t B = S > grid.bound ? grid.bound : S.get_si();

  Rng rng(grid.seed ^ 0x6a09e667f3bcc909ULL);
  const int budget = 8 * std::max(grid.retries, 1) + 8;
  auto combine = [&](const IntMat& L) {
    ProjectiveVariety W{{}, V.x, r};
    for (std::size_t i = 0; i < c; ++i) {
      MPoly g(V.polys[0].vars());
      for (std::size_t j = 0; j < m; ++j)
        if (L(i, j) != 0) g = g + scale(V.polys[j], L(i, j));
      W.polys.push_back(g);
    }
    return W;
  };
  auto acceptable = [&](const IntMat& L, std::uint64_t s) {
    auto W = combine(L);
    for (const auto& g : W.polys)
      if (g.is_zero()) return false;
    RandomGrid g2 = grid;
    g2.seed = s;
    return dim_leq(W, r, g2);
  };

  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<LambdaMatrix> out;
    bool ok = true;
    for (std::size_t i = 0; i < N && ok; ++i) {
      LambdaMatrix lm{IntMat(c, m), rng.next()};
      if (N == 1 && m == c && attempt == 0) {
        for (std::size_t k = 0; k < c; ++k) lm.lambda(k, k) = 1;
      } else {
        Rng local(lm.seed);
        for (auto& v : lm.lambda.a) v = local.uniform_mpz(1, B);
      }
      ok = acceptable(lm.lambda, lm.seed);
      if (ok) out.push_back(std::move(lm));
    }
    if (!ok) continue;
    IntMat Xi(N * c, m);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t j = 0; j < m; ++j) Xi(i * c + k, j) = out[i].lambda(k, j);
    if (rank(Xi) == m) return out;
  }
  throw IndeterminateError("no generic linear combinations found after " + std::to_string(budget) +
                           " attempts (grid bound " + std::to_string(B) + ", dimension " + std::to_string(r) +
                           "); is the variety of the stated dimension?");
}

ChowForm chow_form(const ProjectiveVariety& V, int r, const RandomGrid& grid) {
  check_projective(V, r);
  const std::size_t c = V.n() - r;
  // A complete intersection is its own generic combination; equalizing
  // would only add redundant equations.
  if (V.polys.size() == c) {
    if (!dim_leq(V, r, grid)) throw PreconditionError("variety has dimension larger than " + std::to_string(r));
    return chow_form_ci(V, r, grid.seed);
  }
  auto E = degree_equalize(V);
  auto lambdas = generic_lc(E, r, grid);
  MPoly acc;
  for (const auto& lm : lambdas) {
    ProjectiveVariety W{{}, V.x, r};
    for (std::size_t i = 0; i < c; ++i) {
      MPoly g(E.polys[0].vars());
      for (std::size_t j = 0; j < E.polys.size(); ++j)
        if (lm.lambda(i, j) != 0) g = g + scale(E.polys[j], lm.lambda(i, j));
      W.polys.push_back(g);
    }
    MPoly F = chow_form_ci(W, r, lm.seed).poly;
    acc = acc.vars() ? gcd(acc, F) : F;
  }
  const std::string prov = lambdas.size() == 1 ? "ci" : "gcd-of-" + std::to_string(lambdas.size());
  return finish(acc, prov, grid.seed);
}

ChowBounds chow_bounds(std::size_t n, int d, int r) {
  if (r < 0 || static_cast<std::size_t>(r) >= n || d < 1) throw UsageError("bounds need 0 <= r < n and d >= 1");
  const unsigned long c = n - r;
  ChowBounds b;
  mpz_ui_pow_ui(b.per_block.get_mpz_t(), d, c);
  mpz_bin_uiui(b.macaulay_dim.get_mpz_t(), c * (d - 1) + 1 + n, n);
  mpz_class dc1;
  mpz_ui_pow_ui(dc1.get_mpz_t(), d, c - 1);
  for (unsigned long i = 0; i < c; ++i) b.bezout.push_back(dc1);
  for (int i = 0; i <= r; ++i) b.bezout.push_back(b.per_block);
  return b;
}

ChowBounds chow_bounds(const ProjectiveVariety& V, int r) {
  int d = 1;
  for (const auto& f : V.polys) d = std::max(d, degree_in(f, V.x));
  return chow_bounds(V.n(), d, r);
}

mpz_class evaluate_on_plane(const ChowForm& cf, const IntMat& plane) {
  const auto& T = *cf.poly.vars();
  if (plane.rows != T.block_count()) throw UsageError("plane has the wrong number of rows");
  std::vector<mpz_class> pt(T.size());
  for (std::size_t i = 0; i < plane.rows; ++i) {
    if (plane.cols != T.block(i).size()) throw UsageError("plane has the wrong number of columns");
    for (std::size_t j = 0; j < plane.cols; ++j) pt[T.block(i)[j]] = plane(i, j);
  }
  return eval(cf.poly, pt);
}

}  // namespace ck
