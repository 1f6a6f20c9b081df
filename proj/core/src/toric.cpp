#include "chowkit/toric.hpp"

#include <algorithm>
#include <map>

#include "chowkit/lp.hpp"
#include "chowkit/rng.hpp"
#include "layout.hpp"

namespace ck {

namespace {

using Point = std::vector<int>;

void simplex_points(std::size_t k, int d, bool positive, Point& cur, std::size_t at, std::vector<Point>& out) {
  if (at == k) {
    out.push_back(cur);
    return;
  }
  int lo = positive ? 1 : 0;
  int used = 0;
  for (std::size_t j = 0; j < at; ++j) used += cur[j];
  for (int e = lo; used + e + (positive ? static_cast<int>(k - at - 1) : 0) <= d; ++e) {
    cur[at] = e;
    simplex_points(k, d, positive, cur, at + 1, out);
  }
  cur[at] = 0;
}

// Product over blocks of simplex points; `positive` keeps coordinates >= 1.
std::vector<Point> product_points(const std::vector<std::size_t>& dims, const std::vector<int>& deg, bool positive) {
  std::vector<Point> acc{Point{}};
  for (std::size_t b = 0; b < dims.size(); ++b) {
    std::vector<Point> pts;
    Point cur(dims[b], 0);
    simplex_points(dims[b], deg[b], positive, cur, 0, pts);
    std::vector<Point> next;
    for (const auto& a : acc)
      for (const auto& p : pts) {
        Point q = a;
        q.insert(q.end(), p.begin(), p.end());
        next.push_back(std::move(q));
      }
    acc.swap(next);
  }
  return acc;
}

struct LiftingFailure {};

struct Setup {
  detail::ParamSplit ps;
  std::vector<std::size_t> elim;
  std::vector<std::size_t> dims;           // n_b
  std::vector<std::vector<int>> deg;       // per poly, per block
  std::vector<std::vector<Point>> support; // affine points per poly
  std::vector<detail::SplitPoly> polys;    // slots aligned with `support`
  std::vector<Point> lattice;              // rows/columns
};

ExpVec homogenize(const Setup& s, const std::vector<int>& d, const Point& a) {
  ExpVec e;
  std::size_t at = 0;
  for (std::size_t b = 0; b < s.dims.size(); ++b) {
    int rest = d[b];
    for (std::size_t k = 0; k < s.dims[b]; ++k) rest -= a[at + k];
    e.push_back(rest);
    for (std::size_t k = 0; k < s.dims[b]; ++k) e.push_back(a[at + k]);
    at += s.dims[b];
  }
  return e;
}

Setup prepare(const MultiResSystem& sys) {
  Setup s;
  s.deg = multidegrees(sys);
  for (const auto& b : sys.blocks) {
    s.dims.push_back(b.size() - 1);
    s.elim.insert(s.elim.end(), b.begin(), b.end());
  }
  s.ps = detail::split_params(sys.polys[0].vars(), s.elim);
  std::vector<int> total(s.dims.size(), 0);
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    s.support.push_back(product_points(s.dims, s.deg[i], false));
    auto raw = detail::split_poly(sys.polys[i], s.elim, s.ps);
    detail::SplitPoly sp;
    for (const auto& a : s.support.back()) {
      ExpVec e = homogenize(s, s.deg[i], a);
      int k = raw.slot(e);
      sp.mons.push_back(e);
      sp.coeffs.push_back(k >= 0 ? raw.coeffs[k] : MPoly(s.ps.params));
    }
    s.polys.push_back(std::move(sp));
    for (std::size_t b = 0; b < total.size(); ++b) total[b] += s.deg[i][b];
  }
  s.lattice = product_points(s.dims, total, true);
  if (s.lattice.size() > 20000) throw UsageError("Canny-Emiris matrix too large");
  return s;
}

detail::MatrixLayout subdivide(const Setup& s, Rng& rng) {
  const std::size_t N = s.lattice.empty() ? 0 : s.lattice[0].size();
  const std::size_t L = s.polys.size();
  // Lifting heights decrease along the polynomial order by a large factor.
  std::vector<std::vector<mpq_class>> lift(L);
  mpz_class scale = 1;
  for (std::size_t i = L; i-- > 0;) {
    for (std::size_t k = 0; k < s.support[i].size(); ++k) lift[i].push_back(mpq_class(rng.uniform_mpz(1, 1 << 16) * scale));
    scale *= 1000;
  }
  std::vector<mpq_class> delta(N);
  for (std::size_t k = 0; k < N; ++k) delta[k] = mpq_class(rng.uniform_mpz(1, 1 << 12), mpz_class(1) << 20);

  std::vector<std::pair<std::size_t, std::size_t>> var;  // (poly, support index)
  std::vector<mpq_class> cost;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t k = 0; k < s.support[i].size(); ++k) {
      var.emplace_back(i, k);
      cost.push_back(lift[i][k]);
    }
  std::vector<std::vector<mpq_class>> A(N + L, std::vector<mpq_class>(var.size(), 0));
  for (std::size_t j = 0; j < var.size(); ++j) {
    const Point& a = s.support[var[j].first][var[j].second];
    for (std::size_t k = 0; k < N; ++k) A[k][j] = a[k];
    A[N + var[j].first][j] = 1;
  }

  std::map<Point, std::size_t> col;
  for (std::size_t k = 0; k < s.lattice.size(); ++k) col.emplace(s.lattice[k], k);
  detail::MatrixLayout lay;
  lay.dim = s.lattice.size();
  lay.rows.resize(lay.dim);
  lay.row_poly.resize(lay.dim);
  std::vector<mpq_class> b(N + L, 1);
  for (std::size_t r = 0; r < lay.dim; ++r) {
    const Point& p = s.lattice[r];
    for (std::size_t k = 0; k < N; ++k) b[k] = mpq_class(p[k]) - delta[k];
    auto res = lp_minimize(A, b, cost);
    if (!res.feasible) throw LiftingFailure{};
    std::vector<std::vector<std::size_t>> face(L);
    for (std::size_t j = 0; j < var.size(); ++j)
      if (res.x[j] > 0) face[var[j].first].push_back(var[j].second);
    std::size_t dimsum = 0, vertices = 0, owner = L;
    for (std::size_t i = 0; i < L; ++i) {
      if (face[i].empty()) throw LiftingFailure{};
      dimsum += face[i].size() - 1;
      if (face[i].size() == 1) {
        ++vertices;
        owner = i;
      }
    }
    if (dimsum != N || owner == L) throw LiftingFailure{};
    if (vertices > 1) lay.m0.push_back(r);
    lay.row_poly[r] = owner;
    const Point& a = s.support[owner][face[owner][0]];
    for (std::size_t k = 0; k < s.support[owner].size(); ++k) {
      Point c = p;
      for (std::size_t t = 0; t < N; ++t) c[t] += s.support[owner][k][t] - a[t];
      auto it = col.find(c);
      if (it == col.end()) throw LiftingFailure{};
      lay.rows[r].emplace_back(it->second, static_cast<int>(k));
    }
  }
  return lay;
}

}  // namespace

std::vector<std::vector<int>> multidegrees(const MultiResSystem& sys) {
  if (sys.polys.empty() || sys.blocks.empty()) throw UsageError("empty multihomogeneous system");
  std::size_t dim = 0;
  for (const auto& b : sys.blocks) {
    if (b.size() < 2) throw UsageError("each block needs at least two variables");
    dim += b.size() - 1;
  }
  if (sys.polys.size() != dim + 1) throw UsageError("system must have one more polynomial than the ambient dimension");
  std::vector<std::vector<int>> out;
  for (const auto& f : sys.polys) {
    if (!same_vars(f.vars(), sys.polys[0].vars())) throw UsageError("polynomials live over different variable tables");
    if (f.is_zero()) throw UsageError("zero polynomial in system");
    std::vector<int> d;
    for (const auto& b : sys.blocks) {
      if (!is_homogeneous_in(f, b)) throw UsageError("polynomial not multihomogeneous in the eliminated blocks");
      d.push_back(degree_in(f, b));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<long long> bezout_bounds(const MultiResSystem& sys) {
  auto deg = multidegrees(sys);
  const std::size_t l = sys.blocks.size();
  std::vector<int> n(l);
  for (std::size_t b = 0; b < l; ++b) n[b] = static_cast<int>(sys.blocks[b].size()) - 1;
  std::vector<long long> out;
  for (std::size_t k = 0; k < deg.size(); ++k) {
    // Coefficient of prod h_b^{n_b} in prod_{j != k} (sum_b d_jb h_b), dense over the box.
    std::map<std::vector<int>, mpz_class> poly{{std::vector<int>(l, 0), 1}};
    for (std::size_t j = 0; j < deg.size(); ++j) {
      if (j == k) continue;
      std::map<std::vector<int>, mpz_class> next;
      for (const auto& [e, c] : poly)
        for (std::size_t b = 0; b < l; ++b) {
          if (deg[j][b] == 0 || e[b] == n[b]) continue;
          auto f = e;
          ++f[b];
          next[f] += c * deg[j][b];
        }
      poly.swap(next);
    }
    auto it = poly.find(n);
    mpz_class v = it == poly.end() ? mpz_class(0) : it->second;
    if (!v.fits_slong_p()) throw UsageError("Bezout bound overflow");
    out.push_back(v.get_si());
  }
  return out;
}

bool multihomogeneous_resultant_vanishes(const MultiResSystem& sys, std::uint64_t seed) {
  Setup s = prepare(sys);
  if (s.ps.params->size() != 0) throw UsageError("system has parameters");
  Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng sub = rng.derive(static_cast<std::uint64_t>(attempt));
    detail::MatrixLayout lay;
    try {
      lay = subdivide(s, sub);
    } catch (const LiftingFailure&) {
      continue;
    }
    std::vector<std::vector<mpz_class>> g(s.polys.size());
    for (std::size_t i = 0; i < s.polys.size(); ++i)
      for (std::size_t k = 0; k < s.polys[i].mons.size(); ++k) g[i].push_back(sub.uniform_mpz(-7, 7));
    detail::LayoutOracle oracle(lay, s.polys, std::move(g));
    try {
      if (auto v = oracle.value({})) return *v == 0;
      auto r = oracle.series({});
      if (!r) continue;
      return r->empty() || (*r)[0] == 0;
    } catch (const detail::QuotientNotExact&) {
    }
  }
  throw IndeterminateError("no usable lifting for the Canny-Emiris matrix after retries");
}

std::size_t canny_emiris_dim(const MultiResSystem& sys) { return prepare(sys).lattice.size(); }

MPoly resultant_multihomogeneous(const MultiResSystem& sys, const ResultantOptions& opt, InterpReport* report) {
  Setup s = prepare(sys);
  auto mk = bezout_bounds(sys);
  std::vector<bool> perturbed(s.polys.size(), false);
  bool any_param = false, all_param = true;
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    bool has = false;
    for (const auto& c : s.polys[i].coeffs)
      if (!c.is_zero() && !c.is_constant()) has = true;
    perturbed[i] = !has;
    any_param = any_param || has;
    all_param = all_param && has;
  }
  if (all_param || !any_param) std::fill(perturbed.begin(), perturbed.end(), true);
  auto blocks = detail::resultant_blocks(s.ps.params, s.polys, mk, perturbed);

  Rng rng(opt.seed ^ 0x632be59bd9b4e019ULL);
  constexpr int kLiftings = 8;
  for (int attempt = 0; attempt < kLiftings; ++attempt) {
    Rng sub = rng.derive(static_cast<std::uint64_t>(attempt));
    detail::MatrixLayout lay;
    try {
      lay = subdivide(s, sub);
    } catch (const LiftingFailure&) {
      continue;
    }
    std::vector<std::vector<mpz_class>> g(s.polys.size());
    for (std::size_t i = 0; i < s.polys.size(); ++i)
      if (perturbed[i])
        for (std::size_t k = 0; k < s.polys[i].mons.size(); ++k) g[i].push_back(sub.uniform_mpz(-7, 7));
    detail::LayoutOracle oracle(lay, s.polys, std::move(g));
    InterpOptions io;
    io.seed = sub.next();
    io.retries = opt.retries;
    io.strategy = opt.strategy;
    try {
      MPoly r = interpolate_lowest(s.ps.params, blocks, oracle, io, report);
      if (r.is_zero()) throw InternalError("perturbed multihomogeneous resultant vanishes identically");
      return r;
    } catch (const detail::QuotientNotExact&) {
    } catch (const InterpolationMismatch&) {
    }
  }
  throw IndeterminateError("no usable lifting for the Canny-Emiris matrix after retries");
}

}  // namespace ck
