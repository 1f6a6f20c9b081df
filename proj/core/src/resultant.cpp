#include "chowkit/resultant.hpp"

#include <algorithm>
#include <map>

#include "chowkit/rng.hpp"
#include "layout.hpp"

namespace ck {

namespace {

constexpr std::size_t kMaxMacaulayDim = 6000;

void monomials_of_degree(std::size_t nv, int t, ExpVec& cur, std::size_t k, std::vector<ExpVec>& out) {
  if (k + 1 == nv) {
    cur[k] = t;
    out.push_back(cur);
    return;
  }
  for (int e = t; e >= 0; --e) {
    cur[k] = e;
    monomials_of_degree(nv, t - e, cur, k + 1, out);
  }
}

struct MacaulayContext {
  detail::ParamSplit ps;
  std::vector<detail::SplitPoly> polys;
  detail::MatrixLayout lay;
  std::vector<ExpVec> mons;
  std::vector<int> deg;
  int t = 0;
};

MacaulayContext build(const MacaulaySystem& sys) {
  MacaulayContext ctx;
  ctx.deg = elim_degrees(sys);
  const std::size_t nv = sys.elim_vars.size();
  ctx.ps = detail::split_params(sys.polys[0].vars(), sys.elim_vars);
  for (const auto& f : sys.polys) ctx.polys.push_back(detail::split_poly(f, sys.elim_vars, ctx.ps));
  // Every polynomial gets a slot for its perturbation monomial x_i^{d_i}.
  for (std::size_t i = 0; i < nv; ++i) {
    ExpVec e(nv, 0);
    e[i] = ctx.deg[i];
    ctx.polys[i].ensure(e, ctx.ps.params);
  }
  ctx.t = 1;
  for (int d : ctx.deg) ctx.t += d - 1;

  // Column count C(t+n, n), checked before enumerating.
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(ctx.t) + nv - 1, nv - 1);
  if (count > static_cast<unsigned long>(kMaxMacaulayDim)) throw UsageError("Macaulay matrix too large");
  ExpVec cur(nv, 0);
  monomials_of_degree(nv, ctx.t, cur, 0, ctx.mons);

  std::map<ExpVec, std::size_t> col;
  for (std::size_t k = 0; k < ctx.mons.size(); ++k) col.emplace(ctx.mons[k], k);
  auto& lay = ctx.lay;
  lay.dim = ctx.mons.size();
  lay.rows.resize(lay.dim);
  lay.row_poly.resize(lay.dim);
  for (std::size_t r = 0; r < lay.dim; ++r) {
    const ExpVec& mu = ctx.mons[r];
    std::size_t owner = nv, divisible = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (mu[i] >= ctx.deg[i]) {
        ++divisible;
        if (owner == nv) owner = i;
      }
    if (divisible > 1) lay.m0.push_back(r);
    lay.row_poly[r] = owner;
    ExpVec shift = mu;
    shift[owner] -= ctx.deg[owner];
    const auto& sp = ctx.polys[owner];
    for (std::size_t s = 0; s < sp.mons.size(); ++s) {
      ExpVec c = shift;
      for (std::size_t k = 0; k < nv; ++k) c[k] += sp.mons[s][k];
      lay.rows[r].emplace_back(col.at(c), static_cast<int>(s));
    }
  }
  return ctx;
}

std::vector<std::vector<mpz_class>> diagonal_perturbation(const MacaulayContext& ctx,
                                                          const std::vector<std::size_t>& perturb) {
  const std::size_t nv = ctx.deg.size();
  std::vector<std::vector<mpz_class>> g(ctx.polys.size());
  for (auto i : perturb) {
    if (i >= ctx.polys.size()) throw UsageError("perturbation index out of range");
    ExpVec e(nv, 0);
    e[i % nv] = ctx.deg[i];
    g[i].assign(ctx.polys[i].mons.size(), 0);
    g[i][ctx.polys[i].slot(e)] = 1;
  }
  return g;
}

}  // namespace

Vars param_vars(const Vars& vars, const std::vector<std::size_t>& elim) {
  return detail::split_params(vars, elim).params;
}

std::vector<int> elim_degrees(const MacaulaySystem& sys) {
  const std::size_t nv = sys.elim_vars.size();
  if (nv == 0) throw UsageError("no eliminated variables");
  if (sys.polys.size() != nv) throw UsageError("system must have one more polynomial than projective dimension");
  std::vector<int> d;
  for (const auto& f : sys.polys) {
    if (!same_vars(f.vars(), sys.polys[0].vars())) throw UsageError("polynomials live over different variable tables");
    if (f.is_zero()) throw UsageError("zero polynomial in system");
    if (!is_homogeneous_in(f, sys.elim_vars)) throw UsageError("polynomial not homogeneous in the eliminated variables");
    int e = degree_in(f, sys.elim_vars);
    if (e < 1) throw UsageError("polynomial of degree 0 in the eliminated variables");
    d.push_back(e);
  }
  return d;
}

MacaulayMatrices macaulay_matrix(const MacaulaySystem& sys) {
  auto ctx = build(sys);
  const auto& lay = ctx.lay;
  const Vars& P = ctx.ps.params;
  MacaulayMatrices out{PolyMatrix(P, lay.dim), PolyMatrix(P, 0), ctx.mons, lay.row_poly, lay.m0, ctx.t};
  for (std::size_t r = 0; r < lay.dim; ++r)
    for (auto [c, s] : lay.rows[r]) out.M.set(r, c, ctx.polys[lay.row_poly[r]].coeffs[s]);
  out.M0 = out.M.submatrix(lay.m0);
  return out;
}

std::vector<long long> bezout_bounds(const MacaulaySystem& sys) {
  auto d = elim_degrees(sys);
  std::vector<long long> out(d.size(), 1);
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != k && __builtin_mul_overflow(out[k], static_cast<long long>(d[j]), &out[k]))
        throw UsageError("Bezout bound overflow");
  return out;
}

MPoly resultant_dense(const MacaulaySystem& sys, const ResultantOptions& opt) {
  auto ctx = build(sys);
  detail::LayoutOracle oracle(ctx.lay, ctx.polys, {});
  Rng rng(opt.seed ^ 0xd1b54a32d192ed03ULL);
  bool live = false;
  for (int k = 0; k < 3 && !live; ++k) {
    std::vector<mpz_class> pt(ctx.ps.params->size());
    for (auto& x : pt) x = rng.uniform_mpz(-1000, 1000);
    live = oracle.minor_det(pt) != 0;
  }
  if (!live) throw DegenerateQuotient();
  auto blocks = detail::resultant_blocks(ctx.ps.params, ctx.polys, bezout_bounds(sys),
                                         std::vector<bool>(ctx.polys.size(), false));
  InterpOptions io;
  io.seed = opt.seed;
  io.retries = opt.retries;
  io.strategy = opt.strategy;
  return interpolate_lowest(ctx.ps.params, blocks, oracle, io);
}

MPoly gcp_resultant(const MacaulaySystem& sys, const std::vector<std::size_t>& perturb, const ResultantOptions& opt,
                    InterpReport* report) {
  auto ctx = build(sys);
  std::vector<bool> flag(ctx.polys.size(), false);
  for (auto i : perturb) flag.at(i) = true;
  detail::LayoutOracle oracle(ctx.lay, ctx.polys, diagonal_perturbation(ctx, perturb));
  auto blocks = detail::resultant_blocks(ctx.ps.params, ctx.polys, bezout_bounds(sys), flag);
  InterpOptions io;
  io.seed = opt.seed;
  io.retries = opt.retries;
  io.strategy = opt.strategy;
  MPoly r = interpolate_lowest(ctx.ps.params, blocks, oracle, io, report);
  if (r.is_zero()) throw InternalError("perturbed resultant vanishes identically");
  return r;
}

bool resultant_vanishes(const MacaulaySystem& sys) {
  auto ctx = build(sys);
  if (ctx.ps.params->size() != 0) throw UsageError("system has parameters");
  std::vector<std::size_t> all(sys.polys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  detail::LayoutOracle oracle(ctx.lay, ctx.polys, diagonal_perturbation(ctx, all));
  if (auto v = oracle.value({})) return *v == 0;
  auto r = oracle.series({});
  if (!r) throw InternalError("perturbed extraneous minor vanishes");
  return r->empty() || (*r)[0] == 0;
}

MPoly gcp_resultant(const MacaulaySystem& sys, const ResultantOptions& opt) {
  std::vector<std::size_t> all(sys.polys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return gcp_resultant(sys, all, opt);
}

}  // namespace ck
