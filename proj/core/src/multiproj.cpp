#include "chowkit/multiproj.hpp"

#include <algorithm>
#include <map>

#include "chowkit/errors.hpp"
#include "chowkit/gcd.hpp"
#include "chowkit/intmat.hpp"
#include "chowkit/toric.hpp"
#include "reduce.hpp"

namespace ck {

namespace {

int full_dim(const std::vector<int>& n, const DimTable& table) {
  const std::size_t l = n.size();
  if (l == 0 || l > 16) throw UsageError("number of blocks out of range");
  for (unsigned I = 1; I < (1u << l); ++I)
    if (!table.count(I)) throw UsageError("dimension table misses subset " + std::to_string(I));
  return table.at((1u << l) - 1);
}

int sum(const Format& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

// All a with 0 <= a <= n and |a| = total.
std::vector<Format> formats_of_size(const std::vector<int>& n, int total) {
  std::vector<Format> out;
  if (total < 0) return out;
  Format a(n.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n.size()) {
      if (left <= n[i]) {
        a[i] = left;
        out.push_back(a);
      }
      return;
    }
    for (int v = 0; v <= std::min(left, n[i]); ++v) {
      a[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

long long slack(const std::vector<int>& n, const Format& a, unsigned I) {
  long long s = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (I >> i & 1u) s += n[i] - a[i];
  return s;
}

int codim(const std::vector<int>& n, const DimTable& table) {
  int total = 0;
  for (int v : n) total += v;
  return total - full_dim(n, table);
}

// x blocks of V followed by u-blocks for format a; V's polynomials moved over.
struct MultiLayout {
  Vars S;
  std::vector<MPoly> f;
  std::vector<std::vector<std::size_t>> xblocks;
  std::vector<MPoly> forms;
};

std::string multi_u_name(std::size_t i, std::size_t j, std::size_t k, bool wide) {
  if (wide) return "u" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
  return "u" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

bool wide_names(const std::vector<int>& n, const Format& a) {
  if (n.size() > 10) return true;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] + 1 > 10 || n[i] - a[i] > 10) return true;
  return false;
}

MultiLayout multi_layout(const MultiprojVariety& V, const Format& a) {
  const auto n = V.block_dims();
  const Vars& T = V.polys.at(0).vars();
  const bool wide = wide_names(n, a);
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> map(T->size(), SIZE_MAX);
  for (const auto& b : V.blocks) {
    blocks.emplace_back();
    for (auto v : b) {
      map[v] = names.size();
      blocks.back().push_back(names.size());
      names.push_back(T->name(v));
    }
  }
  const std::size_t l = blocks.size();
  for (std::size_t i = 0; i < l; ++i)
    for (int j = 0; j < n[i] - a[i]; ++j) {
      blocks.emplace_back();
      for (int k = 0; k <= n[i]; ++k) {
        blocks.back().push_back(names.size());
        names.push_back(multi_u_name(i, j, k, wide));
      }
    }
  for (std::size_t x = 0; x < names.size(); ++x)
    if (std::count(names.begin(), names.end(), names[x]) > 1) throw UsageError("variable name clashes with " + names[x]);
  MultiLayout L;
  L.S = make_vars(names, blocks);
  L.xblocks.assign(blocks.begin(), blocks.begin() + l);
  for (const auto& f : V.polys) L.f.push_back(remap(f, L.S, map));
  std::size_t ub = l;
  for (std::size_t i = 0; i < l; ++i)
    for (int j = 0; j < n[i] - a[i]; ++j, ++ub) {
      MPoly U(L.S);
      for (int k = 0; k <= n[i]; ++k)
        U = U + MPoly::variable(L.S, L.S->block(ub)[k]) * MPoly::variable(L.S, L.xblocks[i][k]);
      L.forms.push_back(U);
    }
  return L;
}

MultiChowForm finish(const MPoly& R, const Format& a, const std::string& prov, std::uint64_t seed) {
  MultiChowForm cf;
  cf.poly = normalize(square_free_part(R));
  cf.format = a;
  cf.degrees = block_degrees(cf.poly);
  cf.bitsize = bitsize(cf.poly);
  cf.provenance = prov;
  cf.seed = seed;
  return cf;
}

MPoly chow_ci_unchecked(const MultiprojVariety& V, const Format& a, std::uint64_t seed) {
  auto L = multi_layout(V, a);
  MultiResSystem sys{L.f, L.xblocks};
  for (const auto& U : L.forms) sys.polys.push_back(U);
  ResultantOptions opt;
  opt.seed = seed;
  MPoly R = resultant_multihomogeneous(sys, opt);
  if (R.is_zero()) throw PreconditionError("not a complete intersection of expected dimension");
  return R;
}

int dim_of(const MultiprojVariety& V) {
  if (V.dim >= 0) return V.dim;
  return V.ambient_dim() - static_cast<int>(V.polys.size());
}

void check_format(const MultiprojVariety& V, const Format& a) {
  const auto n = V.block_dims();
  if (a.size() != n.size()) throw UsageError("format has the wrong number of entries");
  for (std::size_t i = 0; i < n.size(); ++i)
    if (a[i] < 0 || a[i] > n[i]) throw UsageError("format entry out of range");
}

DimTable table_for(const MultiprojVariety& V, const RandomGrid& grid, const DimTable* table) {
  return table ? *table : dim_table(V, grid);
}

// Points counted through M = m0 A + m1 B: the resultant is a binary form in
// (m0, m1) whose distinct roots are the values (A(p) : B(p)).
long long count_points(const MultiprojVariety& V, const Format& a, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = V.block_dims();
  MultiprojVariety W = V;
  const Vars& T = V.polys.at(0).vars();
  for (std::size_t b = 0; b < n.size(); ++b)
    for (int k = 0; k < n[b] - a[b]; ++k) W.polys.push_back(random_form(T, V.blocks[b], 1, rng, 50));
  auto R = detail::reduce_linear(W);
  if (R.empty) return 0;
  std::size_t N = 0;
  for (const auto& b : R.blocks) N += b.size() - 1;
  if (R.blocks.empty()) return 1;
  if (R.polys.size() < N) throw IndeterminateError("slice is not finite; the format is not in the support");

  std::vector<std::string> names = R.table->names();
  auto blocks = R.table->blocks();
  blocks.push_back({names.size(), names.size() + 1});
  names.push_back("m0");
  names.push_back("m1");
  Vars S = make_vars(names, blocks);
  std::vector<std::size_t> map(R.table->size());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = v;
  std::vector<MPoly> polys;
  for (const auto& f : R.polys) polys.push_back(remap(f, S, map));

  std::vector<int> ones(R.blocks.size(), 1);
  MPoly M = MPoly::variable(S, names.size() - 2) * random_multiform(S, R.blocks, ones, rng, 50) +
            MPoly::variable(S, names.size() - 1) * random_multiform(S, R.blocks, ones, rng, 50);

  auto solve = [&](const std::vector<MPoly>& sq) {
    MultiResSystem sys{sq, R.blocks};
    sys.polys.push_back(M);
    ResultantOptions opt;
    opt.seed = rng.next();
    return resultant_multihomogeneous(sys, opt);
  };
  MPoly res;
  if (polys.size() == N) {
    res = solve(polys);
  } else {
    // Surplus equations: gcd over two generic square subsystems.
    MultiprojVariety E = multi_degree_equalize(MultiprojVariety{polys, R.blocks, 0});
    for (int t = 0; t < 2; ++t) {
      std::vector<MPoly> sq;
      for (std::size_t k = 0; k < N; ++k) {
        MPoly c(S);
        for (const auto& f : E.polys) c = c + scale(f, rng.uniform_mpz(1, 1000));
        sq.push_back(c);
      }
      MPoly r = square_free_part(solve(sq));
      res = t == 0 ? r : gcd(res, r);
    }
  }
  if (res.is_zero()) throw IndeterminateError("slice is not finite; the format is not in the support");
  // The resultant lives over (m0, m1) only.
  return mdeg(square_free_part(res)).total;
}

std::vector<std::vector<int>> poly_mdegs(const MultiprojVariety& V) {
  std::vector<std::vector<int>> out;
  for (const auto& f : V.polys) {
    std::vector<int> d;
    for (const auto& b : V.blocks) d.push_back(degree_in(f, b));
    out.push_back(d);
  }
  return out;
}

}  // namespace

std::set<Format> support(const std::vector<int>& n, const DimTable& table) {
  const int r = full_dim(n, table);
  std::set<Format> out;
  if (r < 0) return out;
  for (const auto& b : formats_of_size(n, codim(n, table))) {
    bool ok = true;
    for (unsigned I = 1; I < (1u << n.size()) && ok; ++I) ok = slack(n, b, I) <= table.at(I);
    if (ok) out.insert(b);
  }
  return out;
}

Polymatroid support_polymatroid(const std::vector<int>& n, const DimTable& table) {
  full_dim(n, table);
  SubmodularFn d(n.size());
  for (unsigned I = 1; I <= d.full(); ++I) d[I] = std::max(table.at(I), 0);
  return dual(make_polymatroid(d, n));
}

std::set<Format> chow_hypersurface_formats(const std::vector<int>& n, const DimTable& table) {
  auto supp = support(n, table);
  std::set<Format> out;
  if (supp.empty()) return out;
  for (const auto& a : formats_of_size(n, codim(n, table) - 1))
    for (const auto& b : supp) {
      bool le = true;
      for (std::size_t i = 0; i < n.size(); ++i) le = le && a[i] <= b[i];
      if (le) {
        out.insert(a);
        break;
      }
    }
  return out;
}

bool chow_format_by_table(const std::vector<int>& n, const DimTable& table, const Format& a) {
  if (full_dim(n, table) < 0 || sum(a) != codim(n, table) - 1) return false;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (a[i] < 0 || a[i] > n[i]) return false;
  for (unsigned I = 1; I < (1u << n.size()); ++I)
    if (table.at(I) < slack(n, a, I) - 1) return false;
  return true;
}

bool hurwitz_format_by_table(const std::vector<int>& n, const DimTable& table, const Format& a) {
  if (full_dim(n, table) < 0 || sum(a) != codim(n, table)) return false;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (a[i] < 0 || a[i] > n[i]) return false;
  for (unsigned I = 1; I < (1u << n.size()); ++I)
    if (slack(n, a, I) > table.at(I) + 1) return false;
  return true;
}

bool hurwitz_format_by_chow(const std::vector<int>& n, const DimTable& table, const Format& a) {
  if (full_dim(n, table) < 0 || sum(a) != codim(n, table)) return false;
  for (const auto& g : chow_hypersurface_formats(n, table)) {
    bool le = true;
    for (std::size_t i = 0; i < n.size(); ++i) le = le && g[i] <= a[i];
    if (le) return true;
  }
  return false;
}

std::set<Format> hurwitz_hypersurface_formats(const std::vector<int>& n, const DimTable& table, const MdegFn& mdeg) {
  std::set<Format> out;
  if (full_dim(n, table) < 0) return out;
  auto supp = support(n, table);
  for (const auto& a : formats_of_size(n, codim(n, table))) {
    if (supp.count(a)) {
      if (mdeg(a) != 1) out.insert(a);
    } else if (hurwitz_format_by_table(n, table, a)) {
      out.insert(a);
    }
  }
  return out;
}

long long multidegree(const MultiprojVariety& V, const Format& a, const RandomGrid& grid, const DimTable* table) {
  check_format(V, a);
  const auto n = V.block_dims();
  const DimTable t = table_for(V, grid, table);
  if (!support(n, t).count(a)) throw UsageError("format " + to_string(a) + " is not in the support");
  Rng rng(grid.seed ^ 0xa54ff53a5f1d36f1ULL);
  long long c1 = count_points(V, a, rng.next());
  long long c2 = count_points(V, a, rng.next());
  if (c1 == c2) return c1;
  return std::max({c1, c2, count_points(V, a, rng.next())});
}

MultiprojVariety multi_degree_equalize(const MultiprojVariety& V) {
  auto degs = poly_mdegs(V);
  std::vector<int> D(V.blocks.size(), 0);
  for (const auto& d : degs)
    for (std::size_t b = 0; b < D.size(); ++b) D[b] = std::max(D[b], d[b]);
  MultiprojVariety out{{}, V.blocks, V.dim};
  for (std::size_t j = 0; j < V.polys.size(); ++j) {
    std::vector<MPoly> cur{V.polys[j]};
    for (std::size_t b = 0; b < D.size(); ++b) {
      const int e = D[b] - degs[j][b];
      if (e == 0) continue;
      std::vector<int> deg(D.size(), 0);
      deg[b] = e;
      // Monomials of degree e in block b, as coefficient-1 forms.
      std::vector<MPoly> mons;
      std::function<void(std::size_t, int, MPoly)> rec = [&](std::size_t k, int left, MPoly m) {
        const auto& blk = V.blocks[b];
        if (k + 1 == blk.size()) {
          mons.push_back(mul(m, pow(MPoly::variable(m.vars(), blk[k]), left)));
          return;
        }
        for (int p = left; p >= 0; --p) rec(k + 1, left - p, mul(m, pow(MPoly::variable(m.vars(), blk[k]), p)));
      };
      rec(0, e, MPoly::constant(V.polys[j].vars(), 1));
      std::vector<MPoly> next;
      for (const auto& c : cur)
        for (const auto& m : mons) next.push_back(mul(m, c));
      cur = std::move(next);
    }
    for (auto& c : cur) out.polys.push_back(std::move(c));
  }
  return out;
}

Vars multi_u_blocks(const std::vector<int>& n, const Format& a) {
  const bool wide = wide_names(n, a);
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (int j = 0; j < n[i] - a[i]; ++j) {
      blocks.emplace_back();
      for (int k = 0; k <= n[i]; ++k) {
        blocks.back().push_back(names.size());
        names.push_back(multi_u_name(i, j, k, wide));
      }
    }
  return make_vars(names, blocks);
}

MultiChowForm multi_chow_form_ci(const MultiprojVariety& V, const Format& a, const RandomGrid& grid,
                                 const DimTable* table) {
  check_format(V, a);
  if (V.polys.empty()) throw UsageError("no polynomials");
  const int r = dim_of(V);
  if (static_cast<int>(V.polys.size()) != V.ambient_dim() - r)
    throw UsageError("complete intersection needs |n| - r polynomials");
  const DimTable t = table_for(V, grid, table);
  if (!chow_hypersurface_formats(V.block_dims(), t).count(a))
    throw UsageError("format " + to_string(a) + " does not give a hypersurface");
  return finish(chow_ci_unchecked(V, a, grid.seed), a, "ci", grid.seed);
}

std::vector<LambdaMatrix> multi_generic_lc(const MultiprojVariety& V, int r, const RandomGrid& grid) {
  const std::size_t m = V.polys.size();
  const int nn = V.ambient_dim();
  if (r < 0 || r >= nn) throw UsageError("dimension out of range");
  const std::size_t c = nn - r;
  if (m < c) throw PreconditionError("fewer polynomials than the codimension");
  auto degs = poly_mdegs(V);
  for (const auto& d : degs)
    if (d != degs[0]) throw UsageError("multidegrees are not equalized");
  const std::size_t N = (m + c - 1) / c;
  long long dsum = 0;
  for (int v : degs[0]) dsum += v;
  mpz_class S;
  mpz_ui_pow_ui(S.get_mpz_t(), dsum, c);
  S = S * N * c + m + 1;
  const std::int64_t B = S > grid.bound ? grid.bound : S.get_si();

  std::vector<std::size_t> all(V.blocks.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Rng rng(grid.seed ^ 0xbb67ae8584caa73bULL);
  const int budget = 8 * std::max(grid.retries, 1) + 8;
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
      MultiprojVariety W{{}, V.blocks, -1};
      for (std::size_t k = 0; k < c; ++k) {
        MPoly g(V.polys[0].vars());
        for (std::size_t j = 0; j < m; ++j)
          if (lm.lambda(k, j) != 0) g = g + scale(V.polys[j], lm.lambda(k, j));
        ok = ok && !g.is_zero();
        W.polys.push_back(g);
      }
      RandomGrid g2 = grid;
      g2.seed = lm.seed;
      ok = ok && dim_projection(W, all, g2) <= r;
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
                           " attempts (grid bound " + std::to_string(B) + ", dimension " + std::to_string(r) + ")");
}

MultiChowForm multi_chow_form(const MultiprojVariety& V, int r, const Format& a, const RandomGrid& grid,
                              const DimTable* table) {
  check_format(V, a);
  if (V.polys.empty()) throw UsageError("no polynomials");
  MultiprojVariety V2 = V;
  V2.dim = r;
  const DimTable t = table_for(V2, grid, table);
  if (full_dim(V.block_dims(), t) != r) throw PreconditionError("stated dimension disagrees with the dimension table");
  if (!chow_hypersurface_formats(V.block_dims(), t).count(a))
    throw UsageError("format " + to_string(a) + " does not give a hypersurface");
  if (static_cast<int>(V.polys.size()) == V.ambient_dim() - r)
    return finish(chow_ci_unchecked(V2, a, grid.seed), a, "ci", grid.seed);
  auto E = multi_degree_equalize(V2);
  auto lambdas = multi_generic_lc(E, r, grid);
  const std::size_t c = V.ambient_dim() - r;
  MPoly acc;
  for (const auto& lm : lambdas) {
    MultiprojVariety W{{}, V.blocks, r};
    for (std::size_t k = 0; k < c; ++k) {
      MPoly g(E.polys[0].vars());
      for (std::size_t j = 0; j < E.polys.size(); ++j)
        if (lm.lambda(k, j) != 0) g = g + scale(E.polys[j], lm.lambda(k, j));
      W.polys.push_back(g);
    }
    MPoly F = square_free_part(chow_ci_unchecked(W, a, lm.seed));
    acc = acc.vars() ? gcd(acc, F) : F;
  }
  const std::string prov = lambdas.size() == 1 ? "ci" : "gcd-of-" + std::to_string(lambdas.size());
  return finish(acc, a, prov, grid.seed);
}

MultiBounds multi_bounds(const MultiprojVariety& V, const Format& a) {
  check_format(V, a);
  const auto n = V.block_dims();
  const std::size_t l = n.size();
  const int r = dim_of(V);
  const int nn = V.ambient_dim();
  const int c = nn - r;
  if (c < 1 || sum(a) != c - 1) throw UsageError("format size must be codim V - 1");
  int d = 1;
  for (const auto& dv : poly_mdegs(V))
    for (int v : dv) d = std::max(d, v);
  MultiBounds out;
  mpz_class fact_c;
  mpz_fac_ui(fact_c.get_mpz_t(), c);
  mpz_class multi = 0;
  for (std::size_t i = 0; i < l; ++i) {
    mpz_class den = 1, f;
    for (std::size_t j = 0; j < l; ++j) {
      mpz_fac_ui(f.get_mpz_t(), a[j] + (j == i ? 1 : 0));
      den *= f;
    }
    multi += fact_c / den;
  }
  mpz_class dp;
  mpz_ui_pow_ui(dp.get_mpz_t(), d, c);
  out.total_degree = dp * multi;
  for (std::size_t i = 0; i < l; ++i) out.variables += (n[i] - a[i]) * (n[i] + 1);

  // Degree in each u-form: coefficient of prod h_b^{n_b} in the product of
  // the multidegree forms of all other equations.
  std::vector<std::vector<int>> eqs = poly_mdegs(V);
  std::vector<std::size_t> form_block;
  for (std::size_t i = 0; i < l; ++i)
    for (int j = 0; j < n[i] - a[i]; ++j) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      eqs.push_back(e);
      form_block.push_back(i);
    }
  const std::size_t nf = V.polys.size();
  for (std::size_t k = 0; k < form_block.size(); ++k) {
    std::map<std::vector<int>, mpz_class> poly{{std::vector<int>(l, 0), 1}};
    for (std::size_t q = 0; q < eqs.size(); ++q) {
      if (q == nf + k) continue;
      std::map<std::vector<int>, mpz_class> next;
      for (const auto& [e, c0] : poly)
        for (std::size_t b = 0; b < l; ++b) {
          if (eqs[q][b] == 0 || e[b] >= n[b]) continue;
          auto e2 = e;
          ++e2[b];
          next[e2] += c0 * eqs[q][b];
        }
      poly = std::move(next);
    }
    auto it = poly.find(n);
    out.bezout.push_back(it == poly.end() ? mpz_class(0) : it->second);
  }
  return out;
}

}  // namespace ck
