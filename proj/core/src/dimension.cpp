#include "chowkit/dimension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chowkit/errors.hpp"
#include "chowkit/intmat.hpp"
#include "chowkit/resultant.hpp"
#include "chowkit/toric.hpp"
#include "reduce.hpp"

namespace ck {

namespace {

void for_each_monomial(std::size_t k, int d, std::vector<int>& cur, std::size_t at,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (at + 1 == k) {
    cur[at] = d;
    fn(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[at] = e;
    for_each_monomial(k, d - e, cur, at + 1, fn);
  }
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  Rng r(a ^ (b * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace

namespace detail {

Reduced reduce_linear(const MultiprojVariety& V) {
  const Vars& T = V.polys.empty() ? Vars{} : V.polys[0].vars();
  Reduced out;
  const std::size_t l = V.blocks.size();
  std::vector<std::vector<std::vector<mpz_class>>> rows(l);
  std::vector<char> used(V.polys.size(), 0);
  for (std::size_t j = 0; j < V.polys.size(); ++j) {
    const MPoly& f = V.polys[j];
    if (f.is_zero()) {
      used[j] = 1;
      continue;
    }
    std::size_t hit = l, count = 0;
    bool linear = true;
    for (std::size_t b = 0; b < l; ++b) {
      int d = degree_in(f, V.blocks[b]);
      if (d == 0) continue;
      ++count;
      hit = b;
      if (d != 1 || !is_homogeneous_in(f, V.blocks[b])) linear = false;
    }
    if (count == 0) {
      // A nonzero constant has no zeros.
      out.empty = true;
      return out;
    }
    if (count != 1 || !linear) continue;
    std::vector<mpz_class> r(V.blocks[hit].size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      ExpVec e(T->size(), 0);
      e[V.blocks[hit][k]] = 1;
      r[k] = f.coeff_of(e);
    }
    rows[hit].push_back(std::move(r));
    used[j] = 1;
  }

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> nblocks;
  std::vector<std::vector<std::vector<mpz_class>>> kernels(l);
  std::vector<std::size_t> first(l, 0);
  for (std::size_t b = 0; b < l; ++b) {
    const std::size_t nb = V.blocks[b].size();
    if (rows[b].empty()) {
      for (std::size_t k = 0; k < nb; ++k) {
        std::vector<mpz_class> e(nb, 0);
        e[k] = 1;
        kernels[b].push_back(std::move(e));
      }
    } else {
      IntMat A(rows[b].size(), nb);
      for (std::size_t i = 0; i < rows[b].size(); ++i)
        for (std::size_t k = 0; k < nb; ++k) A(i, k) = rows[b][i][k];
      kernels[b] = nullspace(A);
    }
    if (kernels[b].empty()) {
      out.empty = true;
      return out;
    }
    first[b] = names.size();
    if (kernels[b].size() >= 2) {
      std::vector<std::size_t> blk;
      for (std::size_t k = 0; k < kernels[b].size(); ++k) {
        blk.push_back(names.size());
        names.push_back("t" + std::to_string(b) + "_" + std::to_string(k));
      }
      nblocks.push_back(std::move(blk));
    }
  }
  out.table = make_vars(names, names.empty() ? std::vector<std::vector<std::size_t>>{} : nblocks);
  out.blocks = nblocks;

  std::vector<MPoly> h(T->size(), MPoly(out.table));
  for (std::size_t b = 0; b < l; ++b) {
    const auto& K = kernels[b];
    for (std::size_t j = 0; j < V.blocks[b].size(); ++j) {
      MPoly acc(out.table);
      if (K.size() == 1) {
        acc = MPoly::constant(out.table, K[0][j]);
      } else {
        for (std::size_t k = 0; k < K.size(); ++k)
          if (K[k][j] != 0) acc = add(acc, scale(MPoly::variable(out.table, first[b] + k), K[k][j]));
      }
      h[V.blocks[b][j]] = acc;
    }
  }
  for (std::size_t j = 0; j < V.polys.size(); ++j) {
    if (used[j]) continue;
    MPoly g = compose_all(V.polys[j], h, out.table);
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      out.empty = true;
      return out;
    }
    out.polys.push_back(primitive(g));
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Reduced;
using detail::reduce_linear;

// Restricts polynomials to a sub-table holding only the given blocks.
std::pair<std::vector<MPoly>, std::vector<std::vector<std::size_t>>> restrict_to(
    const Reduced& R, const std::vector<std::size_t>& comp_blocks, const std::vector<std::size_t>& comp_polys) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> map(R.table->size(), SIZE_MAX);
  for (auto b : comp_blocks) {
    std::vector<std::size_t> blk;
    for (auto v : R.blocks[b]) {
      map[v] = names.size();
      blk.push_back(names.size());
      names.push_back(R.table->name(v));
    }
    blocks.push_back(std::move(blk));
  }
  Vars sub = make_vars(names, blocks);
  std::vector<MPoly> ps;
  for (auto j : comp_polys) ps.push_back(remap(R.polys[j], sub, map));
  return {ps, blocks};
}

// One randomized emptiness decision on a single connected component.
bool component_trial(const std::vector<MPoly>& polys, const std::vector<std::vector<std::size_t>>& blocks, Rng& rng,
                     std::int64_t B) {
  const Vars& T = polys[0].vars();
  std::size_t N = 0;
  for (const auto& b : blocks) N += b.size() - 1;
  if (blocks.size() == 1) {
    if (polys.size() <= N) return true;  // fewer hypersurfaces than the dimension
    int D = 0;
    for (const auto& f : polys) D = std::max(D, degree_in(f, blocks[0]));
    MacaulaySystem sys{{}, blocks[0]};
    for (std::size_t k = 0; k <= N; ++k) {
      MPoly c(T);
      for (const auto& f : polys) c = add(c, mul(random_form(T, blocks[0], D - degree_in(f, blocks[0]), rng, B), f));
      if (c.is_zero()) return true;
      sys.polys.push_back(primitive(c));
    }
    return resultant_vanishes(sys);
  }
  if (polys.empty()) return true;
  // Fix the other blocks anywhere: m hypersurfaces of positive degree in a
  // block of dimension >= m still meet there.
  for (const auto& b : blocks) {
    bool all = true;
    for (const auto& f : polys) all = all && degree_in(f, b) > 0;
    if (all && polys.size() <= b.size() - 1) return true;
  }
  std::vector<int> D(blocks.size(), 1);
  for (const auto& f : polys)
    for (std::size_t b = 0; b < blocks.size(); ++b) D[b] = std::max(D[b], degree_in(f, blocks[b]));
  MultiResSystem sys{{}, blocks};
  for (std::size_t k = 0; k <= N; ++k) {
    MPoly c(T);
    for (const auto& f : polys) {
      std::vector<int> e(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) e[b] = D[b] - degree_in(f, blocks[b]);
      c = add(c, mul(random_multiform(T, blocks, e, rng, B), f));
    }
    if (c.is_zero()) return true;
    sys.polys.push_back(primitive(c));
  }
  return multihomogeneous_resultant_vanishes(sys, rng.next());
}

bool nonempty_trial(const MultiprojVariety& V, Rng& rng, std::int64_t B) {
  Reduced R = reduce_linear(V);
  if (R.empty) return false;
  const std::size_t l = R.blocks.size();
  // Connected components of the block interaction graph.
  std::vector<std::size_t> parent(l);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::size_t>> touches(R.polys.size());
  for (std::size_t j = 0; j < R.polys.size(); ++j) {
    for (std::size_t b = 0; b < l; ++b)
      if (degree_in(R.polys[j], R.blocks[b]) > 0) touches[j].push_back(b);
    for (std::size_t k = 1; k < touches[j].size(); ++k) parent[find(touches[j][k])] = find(touches[j][0]);
  }
  for (std::size_t root = 0; root < l; ++root) {
    if (find(root) != root) continue;
    std::vector<std::size_t> cb, cp;
    for (std::size_t b = 0; b < l; ++b)
      if (find(b) == root) cb.push_back(b);
    for (std::size_t j = 0; j < R.polys.size(); ++j)
      if (find(touches[j][0]) == root) cp.push_back(j);
    if (cp.empty()) continue;
    auto [ps, blocks] = restrict_to(R, cb, cp);
    if (!component_trial(ps, blocks, rng, B)) return false;
  }
  return true;
}

void check_variety(const MultiprojVariety& V) {
  if (V.blocks.empty()) throw UsageError("variety needs at least one block");
  for (const auto& b : V.blocks)
    if (b.empty()) throw UsageError("empty variable block");
  if (V.polys.empty()) return;
  const Vars& T = V.polys[0].vars();
  std::vector<char> in(T->size(), 0);
  for (const auto& b : V.blocks)
    for (auto v : b) in.at(v) = 1;
  for (const auto& f : V.polys) {
    if (!same_vars(f.vars(), T)) throw UsageError("polynomials live over different variable tables");
    auto d = mdeg(f);
    for (std::size_t v = 0; v < T->size(); ++v)
      if (!in[v] && d.var_deg[v] > 0) throw UsageError("polynomial involves a variable outside the blocks");
    for (const auto& b : V.blocks)
      if (!is_homogeneous_in(f, b)) throw UsageError("polynomial is not multihomogeneous");
  }
}

MultiprojVariety as_multi(const ProjectiveVariety& V) {
  return MultiprojVariety{V.polys, {V.x}, V.dim};
}

MultiprojVariety with_linear_forms(const MultiprojVariety& V, const std::vector<int>& count, Rng& rng, std::int64_t B) {
  MultiprojVariety W = V;
  const Vars& T = V.polys[0].vars();
  for (std::size_t b = 0; b < count.size(); ++b)
    for (int k = 0; k < count[b]; ++k) W.polys.push_back(random_form(T, V.blocks[b], 1, rng, B));
  return W;
}

}  // namespace

std::vector<int> MultiprojVariety::block_dims() const {
  std::vector<int> n;
  for (const auto& b : blocks) n.push_back(static_cast<int>(b.size()) - 1);
  return n;
}

int MultiprojVariety::ambient_dim() const {
  int s = 0;
  for (int v : block_dims()) s += v;
  return s;
}

MPoly random_form(const Vars& table, const std::vector<std::size_t>& vars, int degree, Rng& rng, std::int64_t B) {
  return random_multiform(table, {vars}, {degree}, rng, B);
}

MPoly random_multiform(const Vars& table, const std::vector<std::vector<std::size_t>>& blocks,
                       const std::vector<int>& deg, Rng& rng, std::int64_t B) {
  std::vector<std::vector<std::vector<int>>> per(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (deg[b] < 0) throw UsageError("negative degree");
    std::vector<int> cur(blocks[b].size());
    for_each_monomial(blocks[b].size(), deg[b], cur, 0, [&](const std::vector<int>& e) { per[b].push_back(e); });
  }
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  std::vector<std::size_t> idx(blocks.size(), 0);
  for (;;) {
    ExpVec e(table->size(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t k = 0; k < blocks[b].size(); ++k) e[blocks[b][k]] = per[b][idx[b]][k];
    terms.emplace_back(std::move(e), rng.uniform_mpz(-B, B));
    std::size_t b = 0;
    while (b < blocks.size() && ++idx[b] == per[b].size()) idx[b++] = 0;
    if (b == blocks.size()) break;
  }
  return MPoly::from_terms(table, std::move(terms));
}

bool has_multiprojective_zero(const MultiprojVariety& V, const RandomGrid& grid) {
  check_variety(V);
  if (V.polys.empty()) return true;
  const int trials = std::max(1, grid.retries);
  int yes = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix(grid.seed, 0x51ed27ULL + static_cast<std::uint64_t>(t)));
    if (nonempty_trial(V, rng, grid.bound)) ++yes;
  }
  if (2 * yes > trials) return true;
  if (2 * yes < trials) return false;
  throw IndeterminateError("contradictory emptiness verdicts");
}

bool has_projective_zero(const ProjectiveVariety& V, const RandomGrid& grid) {
  return has_multiprojective_zero(as_multi(V), grid);
}

bool dim_leq(const ProjectiveVariety& V, int r, const RandomGrid& grid) {
  if (r < 0 || static_cast<std::size_t>(r) > V.n()) throw UsageError("dimension bound out of range");
  if (V.polys.empty()) return static_cast<std::size_t>(r) >= V.n();
  Rng rng(mix(grid.seed, 0xd1aULL + static_cast<std::uint64_t>(r)));
  MultiprojVariety W = with_linear_forms(as_multi(V), {r + 1}, rng, grid.bound);
  RandomGrid g = grid;
  g.seed = rng.next();
  return !has_multiprojective_zero(W, g);
}

int projective_dimension(const ProjectiveVariety& V, const RandomGrid& grid) {
  if (!has_projective_zero(V, grid)) return -1;
  for (int r = 0; static_cast<std::size_t>(r) < V.n(); ++r)
    if (dim_leq(V, r, grid)) return r;
  return static_cast<int>(V.n());
}

int dim_projection(const MultiprojVariety& V, const std::vector<std::size_t>& I, const RandomGrid& grid) {
  check_variety(V);
  if (I.empty()) throw UsageError("projection needs a nonempty block set");
  auto n = V.block_dims();
  unsigned mask = 0;
  for (auto i : I) {
    if (i >= n.size()) throw UsageError("block index out of range");
    mask |= 1u << i;
  }
  if (!has_multiprojective_zero(V, grid)) return -1;
  if (V.polys.empty()) {
    int s = 0;
    for (auto i : I) s += n[i];
    return s;
  }
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (mask >> i & 1) blocks.push_back(i);
  int top = 0;
  for (auto i : blocks) top += n[i];
  // The projection has dimension >= s iff it meets a generic product of
  // linear subspaces of some format with total codimension s.
  auto reaches = [&](int s) {
    std::vector<int> gamma(n.size(), 0);
    std::uint64_t tag = 0;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t at, int left) -> bool {
      if (at == blocks.size()) {
        if (left != 0) return false;
        Rng rng(mix(grid.seed, (static_cast<std::uint64_t>(mask) << 40) ^ (static_cast<std::uint64_t>(s) << 20) ^ tag++));
        MultiprojVariety W = with_linear_forms(V, gamma, rng, grid.bound);
        RandomGrid g = grid;
        g.seed = rng.next();
        return has_multiprojective_zero(W, g);
      }
      std::size_t b = blocks[at];
      for (int c = std::min(left, n[b]); c >= 0; --c) {
        gamma[b] = c;
        if (rec(at + 1, left - c)) return true;
      }
      gamma[b] = 0;
      return false;
    };
    return rec(0, s);
  };
  int lo = 0, hi = top;  // reaches(lo) holds
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (reaches(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

DimTable dim_table(const MultiprojVariety& V, const RandomGrid& grid) {
  DimTable t;
  const std::size_t l = V.blocks.size();
  for (unsigned m = 1; m < (1u << l); ++m) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < l; ++i)
      if (m >> i & 1) I.push_back(i);
    t[m] = dim_projection(V, I, grid);
  }
  return t;
}

}  // namespace ck
