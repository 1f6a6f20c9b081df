#include "chowkit/hurwitz.hpp"

#include <algorithm>
#include <numeric>

#include "chowkit/errors.hpp"
#include "chowkit/gcd.hpp"
#include "chowkit/resultant.hpp"

namespace ck {

namespace {

// Table: x (block 0), u1..ur, optionally the m block.
struct Layout {
  Vars S;
  std::vector<MPoly> f;
  std::size_t n1 = 0;
  std::size_t m_block = 0;
};

Layout layout(const ProjectiveVariety& V, int r, bool with_m) {
  const Vars& T = V.polys.at(0).vars();
  Layout L;
  L.n1 = V.x.size();
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks(1);
  for (std::size_t k = 0; k < L.n1; ++k) {
    names.push_back(T->name(V.x[k]));
    blocks[0].push_back(k);
  }
  for (int i = 0; i < r; ++i) {
    blocks.emplace_back();
    for (std::size_t j = 0; j < L.n1; ++j) {
      names.push_back(u_name(1 + i, j, r, L.n1 - 1, 1));
      blocks.back().push_back(names.size() - 1);
    }
  }
  if (with_m) {
    blocks.emplace_back();
    for (std::size_t j = 0; j < L.n1; ++j) {
      names.push_back("m" + std::to_string(j));
      blocks.back().push_back(names.size() - 1);
    }
    L.m_block = blocks.size() - 1;
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    if (std::count(names.begin(), names.end(), names[a]) > 1) throw UsageError("variable name clashes with " + names[a]);
  L.S = make_vars(names, blocks);
  std::vector<std::size_t> map(T->size(), SIZE_MAX);
  for (std::size_t k = 0; k < L.n1; ++k) map[V.x[k]] = k;
  for (const auto& f : V.polys) L.f.push_back(remap(f, L.S, map));
  return L;
}

MPoly form_in_block(const Vars& S, std::size_t block, std::size_t n1) {
  MPoly U(S);
  for (std::size_t j = 0; j < n1; ++j) U = U + MPoly::variable(S, S->block(block)[j]) * MPoly::variable(S, j);
  return U;
}

MPoly incidence_resultant(const Layout& L, int r, const MPoly& h, std::uint64_t seed) {
  MacaulaySystem sys;
  sys.polys = L.f;
  for (int i = 0; i < r; ++i) sys.polys.push_back(form_in_block(L.S, 1 + i, L.n1));
  sys.polys.push_back(h);
  for (std::size_t k = 0; k < L.n1; ++k) sys.elim_vars.push_back(k);
  std::vector<std::size_t> perturb(L.f.size());
  for (std::size_t i = 0; i < perturb.size(); ++i) perturb[i] = i;
  ResultantOptions opt;
  opt.seed = seed;
  return gcp_resultant(sys, perturb, opt);
}

void check_ci(const ProjectiveVariety& V, int r) {
  if (V.x.empty() || V.polys.empty()) throw UsageError("empty system");
  if (r < 1 || static_cast<std::size_t>(r) >= V.n()) throw UsageError("dimension out of range");
  if (V.polys.size() != V.n() - r) throw UsageError("complete intersection needs n - r polynomials");
  for (const auto& f : V.polys)
    if (f.is_zero() || !is_homogeneous_in(f, V.x)) throw UsageError("polynomial not homogeneous");
  if (ci_degree(V) < 2) throw PreconditionError("Hurwitz form needs a variety of degree at least 2");
}

}  // namespace

long long ci_degree(const ProjectiveVariety& V) {
  long long d = 1;
  for (const auto& f : V.polys) d *= degree_in(f, V.x);
  return d;
}

MPoly u_resultant(const ProjectiveVariety& V, int r, std::uint64_t seed) {
  check_ci(V, r);
  Layout L = layout(V, r, true);
  MacaulaySystem sys;
  sys.polys = L.f;
  for (int i = 0; i < r; ++i) sys.polys.push_back(form_in_block(L.S, 1 + i, L.n1));
  sys.polys.push_back(form_in_block(L.S, L.m_block, L.n1));
  for (std::size_t k = 0; k < L.n1; ++k) sys.elim_vars.push_back(k);
  std::vector<std::size_t> perturb(L.f.size());
  for (std::size_t i = 0; i < perturb.size(); ++i) perturb[i] = i;
  ResultantOptions opt;
  opt.seed = seed;
  return gcp_resultant(sys, perturb, opt);
}

MPoly discriminant_via_partials(const MPoly& R1, const std::vector<std::size_t>& m_vars, DiscriminantMode mode,
                                std::uint64_t seed) {
  if (m_vars.empty()) throw UsageError("no m variables");
  if (!is_homogeneous_in(R1, m_vars)) throw UsageError("R1 is not homogeneous in m");
  if (degree_in(R1, m_vars) < 2) throw UsageError("R1 must have degree at least 2 in m");
  MacaulaySystem sys;
  sys.elim_vars = m_vars;
  for (auto v : m_vars) sys.polys.push_back(derivative(R1, v));
  Vars P = param_vars(R1.vars(), m_vars);
  for (const auto& g : sys.polys)
    if (g.is_zero()) return MPoly(P);  // a coordinate point is a common zero
  ResultantOptions opt;
  opt.seed = seed;
  if (mode == DiscriminantMode::plain) return resultant_dense(sys, opt);
  return gcp_resultant(sys, opt);
}

std::vector<std::vector<mpz_class>> small_points(const ProjectiveVariety& V, int h, std::size_t limit) {
  const std::size_t n1 = V.x.size();
  const Vars& T = V.polys.at(0).vars();
  std::vector<std::vector<mpz_class>> out;
  std::vector<long> c(n1, -h);
  std::size_t budget = 200000;
  while (budget-- && out.size() < limit) {
    // Keep one representative per line: first nonzero coordinate positive.
    auto first = std::find_if(c.begin(), c.end(), [](long v) { return v != 0; });
    if (first != c.end() && *first > 0) {
      long g = 0;
      for (long v : c) g = std::gcd(g, v);
      if (g == 1) {
        std::vector<mpz_class> pt(T->size());
        for (std::size_t k = 0; k < n1; ++k) pt[V.x[k]] = c[k];
        bool zero = true;
        for (const auto& f : V.polys)
          if (eval(f, pt) != 0) {
            zero = false;
            break;
          }
        if (zero) {
          std::vector<mpz_class> p(n1);
          for (std::size_t k = 0; k < n1; ++k) p[k] = c[k];
          out.push_back(p);
        }
      }
    }
    std::size_t k = 0;
    while (k < n1 && c[k] == h) c[k++] = -h;
    if (k == n1) break;
    ++c[k];
  }
  return out;
}

std::vector<IntMat> tangent_planes(const ProjectiveVariety& V, int r, std::size_t count, Rng& rng) {
  const std::size_t n1 = V.x.size();
  const Vars& T = V.polys.at(0).vars();
  auto pts = small_points(V, 3, 64);
  std::vector<IntMat> out;
  if (pts.empty()) return out;
  for (std::size_t s = 0; s < count * 4 && out.size() < count; ++s) {
    const auto& p = pts[rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1)];
    std::vector<mpz_class> full(T->size());
    for (std::size_t k = 0; k < n1; ++k) full[V.x[k]] = p[k];
    IntMat J(V.polys.size(), n1);
    for (std::size_t i = 0; i < V.polys.size(); ++i)
      for (std::size_t k = 0; k < n1; ++k) J(i, k) = eval(derivative(V.polys[i], V.x[k]), full);
    auto ker = nullspace(J);
    // Random kernel vector not proportional to p.
    std::vector<mpz_class> v(n1);
    bool found = false;
    for (int tries = 0; tries < 8 && !found; ++tries) {
      std::fill(v.begin(), v.end(), mpz_class(0));
      for (const auto& b : ker) {
        mpz_class c = rng.uniform_mpz(-5, 5);
        for (std::size_t k = 0; k < n1; ++k) v[k] += c * b[k];
      }
      IntMat pv(2, n1);
      for (std::size_t k = 0; k < n1; ++k) {
        pv(0, k) = p[k];
        pv(1, k) = v[k];
      }
      found = rank(pv) == 2;
    }
    if (!found) continue;
    IntMat pv(2, n1);
    for (std::size_t k = 0; k < n1; ++k) {
      pv(0, k) = p[k];
      pv(1, k) = v[k];
    }
    auto perp = nullspace(pv);
    IntMat plane(r, n1);
    for (int i = 0; i < r; ++i)
      for (const auto& b : perp) {
        mpz_class c = rng.uniform_mpz(-5, 5);
        for (std::size_t k = 0; k < n1; ++k) plane(i, k) += c * b[k];
      }
    if (rank(plane) != static_cast<std::size_t>(r)) continue;
    out.push_back(plane);
  }
  return out;
}

HurwitzForm hurwitz_form(const ProjectiveVariety& V, int r, const RandomGrid& grid) {
  check_ci(V, r);
  Rng rng(grid.seed ^ 0x3c6ef372fe94f82bULL);
  MPoly R1 = u_resultant(V, r, grid.seed);
  const Vars& T1 = R1.vars();
  const auto& mvars = T1->block(T1->block_count() - 1);
  const std::size_t n1 = mvars.size();

  // gcd over coordinate changes in m removes factors that depend on the
  // perturbation direction.
  MPoly acc;
  const int changes = 2;
  for (int k = 0; k < changes; ++k) {
    IntMat A(n1, n1);
    do {
      for (auto& a : A.a) a = k == 0 ? mpz_class(0) : rng.uniform_mpz(-3, 3);
      if (k == 0)
        for (std::size_t j = 0; j < n1; ++j) A(j, j) = 1;
    } while (det_bareiss(A) == 0);
    std::vector<MPoly> h;
    for (std::size_t v = 0; v < T1->size(); ++v) h.push_back(MPoly::variable(T1, v));
    for (std::size_t j = 0; j < n1; ++j) {
      MPoly s(T1);
      for (std::size_t i = 0; i < n1; ++i)
        if (A(j, i) != 0) s = s + scale(MPoly::variable(T1, mvars[i]), A(j, i));
      h[mvars[j]] = s;
    }
    MPoly R2 = discriminant_via_partials(compose_all(R1, h, T1), mvars, DiscriminantMode::perturbed,
                                         grid.seed + k);
    MPoly F = square_free_part(R2);
    acc = acc.vars() ? gcd(acc, F) : F;
  }

  // Factors shared with the incidence locus of a generic hyperplane.
  Layout L = layout(V, r, false);
  MPoly H(L.S);
  for (std::size_t j = 0; j < L.n1; ++j) H = H + scale(MPoly::variable(L.S, j), rng.uniform_mpz(1, 97));
  MPoly C = incidence_resultant(L, r, H, grid.seed);
  C = remap_by_name(C, acc.vars());
  for (MPoly g = gcd(acc, C); !g.is_constant(); g = gcd(acc, C)) acc = divide_or_throw(acc, g);
  if (acc.is_constant()) throw InternalError("Hurwitz form reduced to a constant");

  HurwitzForm hf;
  hf.poly = normalize(acc);
  hf.degrees = block_degrees(hf.poly);
  hf.bitsize = bitsize(hf.poly);
  hf.provenance = "ci";
  hf.seed = grid.seed;

  // Verification: zero on tangent planes, nonzero on random planes.
  for (const auto& plane : tangent_planes(V, r, 5, rng)) {
    if (evaluate_on_plane(hf, plane) != 0) throw InternalError("Hurwitz form does not vanish on a tangent plane");
  }
  int nonzero = 0;
  for (int s = 0; s < 5; ++s) {
    IntMat plane(r, n1);
    for (auto& a : plane.a) a = rng.uniform_mpz(-50, 50);
    if (evaluate_on_plane(hf, plane) != 0) ++nonzero;
  }
  if (nonzero == 0) throw InternalError("Hurwitz form vanishes on random planes");
  return hf;
}

}  // namespace ck
