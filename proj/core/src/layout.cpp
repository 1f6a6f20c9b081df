#include "layout.hpp"

#include <algorithm>
#include <map>

#include "chowkit/errors.hpp"

namespace ck::detail {

int SplitPoly::slot(const ExpVec& e) const {
  for (std::size_t k = 0; k < mons.size(); ++k)
    if (mons[k] == e) return static_cast<int>(k);
  return -1;
}

void SplitPoly::ensure(const ExpVec& e, const Vars& params) {
  if (slot(e) >= 0) return;
  mons.push_back(e);
  coeffs.emplace_back(params);
}

ParamSplit split_params(const Vars& vars, const std::vector<std::size_t>& elim) {
  ParamSplit ps;
  ps.to_param.assign(vars->size(), SIZE_MAX);
  std::vector<char> is_x(vars->size(), 0);
  for (auto v : elim) {
    if (v >= vars->size()) throw UsageError("eliminated variable out of range");
    is_x[v] = 1;
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& blk : vars->blocks()) {
    std::vector<std::size_t> nb;
    for (auto v : blk) {
      if (is_x[v]) continue;
      ps.to_param[v] = names.size();
      nb.push_back(names.size());
      names.push_back(vars->name(v));
    }
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  if (names.empty()) blocks.clear();
  ps.params = make_vars(std::move(names), std::move(blocks));
  return ps;
}

SplitPoly split_poly(const MPoly& f, const std::vector<std::size_t>& elim, const ParamSplit& ps) {
  std::map<ExpVec, std::vector<std::pair<ExpVec, mpz_class>>, std::greater<>> groups;
  const std::size_t n = f.nvars();
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    const Exp* e = f.exps(t);
    ExpVec xe(elim.size());
    for (std::size_t k = 0; k < elim.size(); ++k) xe[k] = e[elim[k]];
    ExpVec pe(ps.params->size(), 0);
    for (std::size_t v = 0; v < n; ++v)
      if (ps.to_param[v] != SIZE_MAX) pe[ps.to_param[v]] = e[v];
    groups[xe].emplace_back(std::move(pe), f.coeff(t));
  }
  SplitPoly sp;
  for (auto& [xe, terms] : groups) {
    sp.mons.push_back(xe);
    sp.coeffs.push_back(MPoly::from_terms(ps.params, std::move(terms)));
  }
  return sp;
}

LayoutOracle::LayoutOracle(const MatrixLayout& lay, const std::vector<SplitPoly>& polys,
                           std::vector<std::vector<mpz_class>> perturb)
    : lay_(lay), polys_(polys), pert_(std::move(perturb)) {
  pert_.resize(polys.size());
  std::vector<char> in0(lay.dim, 0);
  for (auto k : lay.m0) in0[k] = 1;
  for (std::size_t r = 0; r < lay.dim; ++r)
    if (!pert_[lay.row_poly[r]].empty()) {
      ++pert_rows_;
      if (in0[r]) ++pert_rows0_;
    }
}

void LayoutOracle::fill(const std::vector<mpz_class>& pt, IntMat& M, IntMat* G) {
  std::vector<std::vector<mpz_class>> vals(polys_.size());
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    vals[i].resize(polys_[i].coeffs.size());
    for (std::size_t k = 0; k < vals[i].size(); ++k)
      if (!polys_[i].coeffs[k].is_zero()) vals[i][k] = eval(polys_[i].coeffs[k], pt);
  }
  M = IntMat(lay_.dim, lay_.dim);
  if (G) *G = IntMat(lay_.dim, lay_.dim);
  for (std::size_t r = 0; r < lay_.dim; ++r) {
    std::size_t i = lay_.row_poly[r];
    for (auto [c, s] : lay_.rows[r]) {
      M(r, c) = vals[i][s];
      if (G && !pert_[i].empty()) (*G)(r, c) = pert_[i][s];
    }
  }
}

mpz_class LayoutOracle::minor_det(const std::vector<mpz_class>& pt) {
  IntMat M;
  fill(pt, M, nullptr);
  if (lay_.m0.empty()) return 1;
  return det_bareiss(M.submatrix(lay_.m0, lay_.m0));
}

std::optional<mpz_class> LayoutOracle::value(const std::vector<mpz_class>& pt) {
  IntMat M;
  fill(pt, M, nullptr);
  mpz_class d0 = 1;
  if (!lay_.m0.empty()) d0 = det_bareiss(M.submatrix(lay_.m0, lay_.m0));
  if (d0 == 0) return std::nullopt;
  mpz_class d = det_bareiss(std::move(M));
  if (!mpz_divisible_p(d.get_mpz_t(), d0.get_mpz_t())) throw QuotientNotExact();
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), d0.get_mpz_t());
  return q;
}

std::optional<UPoly> LayoutOracle::series(const std::vector<mpz_class>& pt) {
  IntMat M, G;
  fill(pt, M, &G);
  UPoly P = pencil_det(M, G, pert_rows_);
  UPoly Q{mpz_class(1)};
  if (!lay_.m0.empty()) Q = pencil_det(M.submatrix(lay_.m0, lay_.m0), G.submatrix(lay_.m0, lay_.m0), pert_rows0_);
  trim(P);
  trim(Q);
  if (Q.empty()) return std::nullopt;
  if (P.empty()) return UPoly{};
  UPoly R;
  if (!udiv_exact(P, Q, R)) throw QuotientNotExact();
  return R;
}

std::vector<ParamBlock> resultant_blocks(const Vars& params, const std::vector<SplitPoly>& polys,
                                         const std::vector<long long>& mk, const std::vector<bool>& perturbed) {
  const std::size_t np = params->size();
  std::vector<std::vector<std::size_t>> sig(np);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<char> hit(np, 0);
    for (const auto& c : polys[i].coeffs)
      for (std::size_t t = 0; t < c.nterms(); ++t)
        for (std::size_t v = 0; v < np; ++v)
          if (c.exps(t)[v]) hit[v] = 1;
    for (std::size_t v = 0; v < np; ++v)
      if (hit[v]) sig[v].push_back(i);
  }
  auto checked = [](long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r) || r > (1 << 20)) throw UsageError("resultant degree bound too large");
    return r;
  };
  std::vector<ParamBlock> out;
  for (const auto& blk : params->blocks()) {
    std::vector<std::size_t> rest;
    std::map<std::size_t, std::vector<std::size_t>> single;
    for (auto v : blk) {
      if (sig[v].size() == 1 && !perturbed[sig[v][0]])
        single[sig[v][0]].push_back(v);
      else
        rest.push_back(v);
    }
    for (auto& [i, vs] : single) {
      int e = -1;
      bool ok = true;
      for (const auto& c : polys[i].coeffs) {
        if (c.is_zero()) continue;
        if (!is_homogeneous_in(c, vs)) {
          ok = false;
          break;
        }
        int d = degree_in(c, vs);
        if (e >= 0 && d != e) {
          ok = false;
          break;
        }
        e = d;
      }
      if (ok && e > 0) {
        out.push_back({vs, static_cast<int>(checked(mk[i], e)), true});
      } else {
        rest.insert(rest.end(), vs.begin(), vs.end());
      }
    }
    if (rest.empty()) continue;
    std::sort(rest.begin(), rest.end());
    long long cap = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      int e = 0;
      for (const auto& c : polys[i].coeffs)
        if (!c.is_zero()) e = std::max(e, degree_in(c, rest));
      cap += checked(mk[i], e);
    }
    out.push_back({rest, static_cast<int>(checked(cap, 1)), false});
  }
  return out;
}

}  // namespace ck::detail
