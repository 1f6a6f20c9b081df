#include "chowkit/interp.hpp"

#include <algorithm>
#include <unordered_map>

#include "chowkit/errors.hpp"
#include "chowkit/rng.hpp"

namespace ck {

namespace {

struct Coords {
  std::vector<std::size_t> var;  // parameter variable of each coordinate
  std::vector<int> block;        // owning block of each coordinate
  std::vector<std::size_t> ones; // dehomogenized variables, fixed to 1 on the grid
};

Coords make_coords(const Vars& params, const std::vector<ParamBlock>& blocks) {
  Coords c;
  std::vector<int> seen(params->size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& pb = blocks[b];
    if (pb.degree < 0) throw UsageError("negative degree bound");
    for (std::size_t i = 0; i < pb.vars.size(); ++i) {
      std::size_t v = pb.vars[i];
      if (v >= params->size() || seen[v]++) throw UsageError("parameter blocks must partition the parameters");
      if (pb.exact && i == 0) {
        c.ones.push_back(v);
        continue;
      }
      c.var.push_back(v);
      c.block.push_back(static_cast<int>(b));
    }
  }
  for (int s : seen)
    if (!s) throw UsageError("parameter blocks must partition the parameters");
  return c;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// All multi-indices with block-wise total degree bounds.
std::vector<std::vector<int>> lower_set(const Coords& c, const std::vector<ParamBlock>& blocks, std::size_t limit) {
  const std::size_t K = c.var.size();
  std::vector<std::vector<int>> out;
  std::vector<int> a(K, 0);
  std::vector<int> used(blocks.size(), 0);
  // Odometer over coordinates; skip configurations exceeding a block bound.
  for (;;) {
    out.push_back(a);
    if (out.size() > limit) throw UsageError("interpolation grid exceeds the point limit");
    std::size_t k = K;
    bool advanced = false;
    while (k-- > 0) {
      int b = c.block[k];
      if (used[b] < blocks[b].degree) {
        ++a[k];
        ++used[b];
        advanced = true;
        break;
      }
      used[b] -= a[k];
      a[k] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

std::vector<std::vector<mpz_class>> draw_nodes(const Coords& c, const std::vector<ParamBlock>& blocks, Rng& rng) {
  std::vector<std::vector<mpz_class>> nodes(c.var.size());
  for (std::size_t k = 0; k < c.var.size(); ++k) {
    int need = blocks[c.block[k]].degree + 1;
    std::int64_t R = std::max<std::int64_t>(1024, 4 * need);
    std::vector<std::int64_t> pick;
    while (static_cast<int>(pick.size()) < need) {
      std::int64_t v = rng.uniform(-R, R);
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    for (auto v : pick) nodes[k].emplace_back(static_cast<long>(v));
  }
  return nodes;
}

int series_order(const UPoly& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return -1;
}

std::vector<mpz_class> random_point(std::size_t n, Rng& rng) {
  std::vector<mpz_class> p(n);
  for (auto& x : p) x = rng.uniform_mpz(-997, 997);
  return p;
}

// Coefficient of s^order at pt, or nullopt on a degenerate point.
// Sets `lower` when a strictly smaller order shows up.
std::optional<mpz_class> coefficient_at(SeriesOracle& o, const std::vector<mpz_class>& pt, int order, int& lower) {
  if (order == 0) {
    if (auto v = o.value(pt)) return *v;
  }
  auto s = o.series(pt);
  if (!s) return std::nullopt;
  int ord = series_order(*s);
  if (ord >= 0 && ord < order) {
    lower = ord;
    return std::nullopt;
  }
  if (static_cast<int>(s->size()) <= order) return mpz_class(0);
  return (*s)[order];
}

MPoly assemble(const Vars& params, const Coords& c, const std::vector<ParamBlock>& blocks,
               const std::vector<std::vector<int>>& idx, const std::vector<mpz_class>& coeffs) {
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (coeffs[t] == 0) continue;
    ExpVec e(params->size(), 0);
    std::vector<int> used(blocks.size(), 0);
    for (std::size_t k = 0; k < c.var.size(); ++k) {
      e[c.var[k]] = idx[t][k];
      used[c.block[k]] += idx[t][k];
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!blocks[b].exact || blocks[b].vars.empty()) continue;
      int rest = blocks[b].degree - used[b];
      if (rest < 0) throw InterpolationMismatch("term exceeds homogeneous degree");
      e[blocks[b].vars[0]] = rest;
    }
    terms.emplace_back(std::move(e), coeffs[t]);
  }
  return MPoly::from_terms(params, std::move(terms));
}

// Newton divided differences on a lower set, then conversion to monomials.
std::vector<mpz_class> newton_lower_set(const std::vector<std::vector<int>>& A,
                                        const std::vector<std::vector<mpz_class>>& nodes,
                                        std::vector<mpq_class> v) {
  const std::size_t K = nodes.size();
  std::unordered_map<std::vector<int>, std::size_t, VecHash> pos;
  pos.reserve(A.size() * 2);
  for (std::size_t i = 0; i < A.size(); ++i) pos.emplace(A[i], i);
  std::vector<std::size_t> order(A.size());
  for (std::size_t c = 0; c < K; ++c) {
    int maxd = 0;
    for (const auto& a : A) maxd = std::max(maxd, a[c]);
    if (maxd == 0) continue;
    // predecessor along coordinate c
    std::vector<std::size_t> prev(A.size(), SIZE_MAX);
    for (std::size_t i = 0; i < A.size(); ++i)
      if (A[i][c] > 0) {
        auto b = A[i];
        --b[c];
        prev[i] = pos.at(b);
      }
    for (std::size_t i = 0; i < A.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return A[x][c] > A[y][c]; });
    for (int k = 1; k <= maxd; ++k) {
      for (std::size_t i : order) {
        int j = A[i][c];
        if (j < k) break;
        v[i] = (v[i] - v[prev[i]]) / mpq_class(nodes[c][j] - nodes[c][j - k]);
      }
    }
  }
  // Newton basis -> monomial basis, one coordinate at a time (Horner).
  for (std::size_t c = 0; c < K; ++c) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i][c] != 0) continue;
      std::vector<std::size_t> line{i};
      auto b = A[i];
      for (;;) {
        ++b[c];
        auto it = pos.find(b);
        if (it == pos.end()) break;
        line.push_back(it->second);
      }
      const std::size_t L = line.size();
      if (L == 1) continue;
      std::vector<mpq_class> poly{v[line[L - 1]]};
      for (std::size_t j = L - 1; j-- > 0;) {
        // poly = poly * (x - xi_j) + v_j
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
          next[t + 1] += poly[t];
          next[t] -= poly[t] * mpq_class(nodes[c][j]);
        }
        next[0] += v[line[j]];
        poly.swap(next);
      }
      for (std::size_t j = 0; j < L; ++j) v[line[j]] = poly[j];
    }
  }
  std::vector<mpz_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i].canonicalize();
    if (v[i].get_den() != 1) throw InterpolationMismatch("interpolant has non-integer coefficients");
    out[i] = v[i].get_num();
  }
  return out;
}

bool verify(const MPoly& r, SeriesOracle& o, const Coords&, int order, Rng& rng, int& lower) {
  int good = 0;
  for (int tries = 0; tries < 12 && good < 2; ++tries) {
    auto pt = random_point(r.nvars(), rng);
    auto s = o.series(pt);
    if (!s) continue;
    int ord = series_order(*s);
    if (ord >= 0 && ord < order) {
      lower = ord;
      return false;
    }
    mpz_class want = static_cast<int>(s->size()) > order ? (*s)[order] : mpz_class(0);
    if (eval(r, pt) != want) throw InterpolationMismatch("interpolated polynomial disagrees at a check point");
    ++good;
  }
  if (good == 0) throw IndeterminateError("no non-degenerate verification point found");
  return true;
}

std::optional<MPoly> try_kronecker(const Vars& params, const Coords& c, const std::vector<ParamBlock>& blocks,
                                   SeriesOracle& o, int& order, InterpReport& rep) {
  const std::size_t K = c.var.size();
  std::vector<long long> w(K);
  long long P = 1;
  for (std::size_t k = 0; k < K; ++k) {
    w[k] = P;
    P *= blocks[c.block[k]].degree + 1;
  }
  std::vector<mpz_class> xs, ys;
  long long z = 2;
  int lower = -1;
  int misses = 0;
  while (static_cast<long long>(xs.size()) < P + 1) {
    for (int sgn : {1, -1}) {
      if (static_cast<long long>(xs.size()) >= P + 1) break;
      mpz_class zz(static_cast<long>(sgn * z));
      std::vector<mpz_class> pt(params->size());
      for (auto v : c.ones) pt[v] = 1;
      for (std::size_t k = 0; k < K; ++k) mpz_pow_ui(pt[c.var[k]].get_mpz_t(), zz.get_mpz_t(), w[k]);
      ++rep.points;
      auto val = coefficient_at(o, pt, order, lower);
      if (lower >= 0) {
        order = lower;
        return std::nullopt;
      }
      if (!val) {
        if (++misses > 64) throw IndeterminateError("too many degenerate evaluation points");
        continue;  // discard and replace the point
      }
      xs.push_back(zz);
      ys.push_back(*val);
    }
    ++z;
  }
  mpz_class vx = xs.back(), vy = ys.back();
  xs.pop_back();
  ys.pop_back();
  UPoly u = interpolate_lagrange(xs, ys);
  if (ueval(u, vx) != vy) throw InterpolationMismatch("packed interpolant fails the check point");
  std::vector<std::vector<int>> idx;
  std::vector<mpz_class> coeffs;
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e] == 0) continue;
    std::vector<int> a(K);
    long long r = static_cast<long long>(e);
    for (std::size_t k = 0; k < K; ++k) {
      long long radix = blocks[c.block[k]].degree + 1;
      a[k] = static_cast<int>(r % radix);
      r /= radix;
    }
    if (r) throw InterpolationMismatch("packed exponent out of range");
    idx.push_back(std::move(a));
    coeffs.push_back(u[e]);
  }
  return assemble(params, c, blocks, idx, coeffs);
}

}  // namespace

MPoly interpolate_lowest(const Vars& params, const std::vector<ParamBlock>& blocks, SeriesOracle& oracle,
                         const InterpOptions& opt, InterpReport* report) {
  InterpReport rep;
  Coords c = make_coords(params, blocks);
  Rng rng(opt.seed ^ 0x5bd1e995ULL);

  // Generic order of the lowest coefficient.
  int order = -1;
  int degenerate = 0;
  for (int probes = 0; probes < 3 || order < 0; ++probes) {
    if (probes > 24) break;
    auto s = oracle.series(random_point(params->size(), rng));
    ++rep.points;
    if (!s) {
      ++degenerate;
      continue;
    }
    int o = series_order(*s);
    if (o >= 0 && (order < 0 || o < order)) order = o;
  }
  if (order < 0) {
    if (degenerate > 20) throw IndeterminateError("oracle degenerate at every probe point");
    if (report) *report = rep;
    return MPoly(params);
  }

  long long packed = 1;
  bool packed_ok = true;
  for (std::size_t k = 0; k < c.var.size(); ++k)
    if (__builtin_mul_overflow(packed, static_cast<long long>(blocks[c.block[k]].degree) + 1, &packed)) {
      packed_ok = false;
      break;
    }
  bool use_kron = opt.strategy == InterpStrategy::kronecker ||
                  (opt.strategy == InterpStrategy::automatic && packed_ok && packed <= opt.kronecker_limit);
  if (opt.strategy == InterpStrategy::kronecker && (!packed_ok || packed > 50'000'000))
    throw UsageError("Kronecker packed degree too large");

  for (int attempt = 0; attempt <= opt.retries + 8; ++attempt) {
    MPoly result(params);
    if (use_kron) {
      auto r = try_kronecker(params, c, blocks, oracle, order, rep);
      if (!r) continue;  // order decreased; redo
      result = *r;
      rep.kronecker = true;
    } else {
      auto A = lower_set(c, blocks, opt.max_points);
      auto nodes = draw_nodes(c, blocks, rng);
      std::vector<mpq_class> vals(A.size());
      bool failed = false;
      int lower = -1;
      for (std::size_t i = 0; i < A.size(); ++i) {
        std::vector<mpz_class> pt(params->size());
        for (auto v : c.ones) pt[v] = 1;
        for (std::size_t k = 0; k < c.var.size(); ++k) pt[c.var[k]] = nodes[k][A[i][k]];
        ++rep.points;
        auto val = coefficient_at(oracle, pt, order, lower);
        if (lower >= 0) break;
        if (!val) {
          failed = true;
          break;
        }
        vals[i] = *val;
      }
      if (lower >= 0) {
        order = lower;
        continue;
      }
      if (failed) {
        if (attempt >= opt.retries) throw IndeterminateError("degenerate interpolation grid after retries");
        continue;
      }
      auto coeffs = newton_lower_set(A, nodes, std::move(vals));
      result = assemble(params, c, blocks, A, coeffs);
    }
    int lower = -1;
    if (!verify(result, oracle, c, order, rng, lower)) {
      order = lower;
      continue;
    }
    rep.order = order;
    if (report) *report = rep;
    return result;
  }
  throw IndeterminateError("interpolation did not stabilise");
}

}  // namespace ck
