#include <doctest.h>

#include "chowkit/dimension.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/polymatroid.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

ProjectiveVariety proj(const Vars& v, const std::vector<std::string>& src) {
  ProjectiveVariety V;
  for (const auto& s : src) V.polys.push_back(parse_poly(s, v));
  for (std::size_t k = 0; k < v->size(); ++k) V.x.push_back(k);
  return V;
}

const RandomGrid grid{5, 1 << 15, 3};

// V(x0 y0 + ... + xn yn) in P^n x P^n.
MultiprojVariety inner_product(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks(2);
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i <= n; ++i) {
      names.push_back((b ? "y" : "x") + std::to_string(i));
      blocks[b].push_back(names.size() - 1);
    }
  auto v = make_vars(names, blocks);
  std::string f;
  for (int i = 0; i <= n; ++i) f += (i ? " + x" : "x") + std::to_string(i) + "*y" + std::to_string(i);
  return MultiprojVariety{{parse_poly(f, v)}, blocks, 2 * n - 1};
}

SubmodularFn as_fn(const DimTable& t, std::size_t l) {
  SubmodularFn f(l);
  for (auto [I, d] : t) f[I] = d;
  return f;
}

}  // namespace

TEST_CASE("has_projective_zero") {
  auto v = make_vars({"x0", "x1", "x2"});
  CHECK_FALSE(has_projective_zero(proj(v, {"x0", "x1", "x2"}), grid));
  CHECK(has_projective_zero(proj(v, {"x0*x1", "x0*x2", "x1*x2"}), grid));
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    // Random quadrics shifted to vanish at (1:1:1).
    std::vector<MPoly> fs;
    for (int k = 0; k < 4; ++k) {
      auto f = random_form(v, {0, 1, 2}, 2, rng, 9);
      auto val = oracle::evaluate(f, {1, 1, 1});
      fs.push_back(f - MPoly::monomial(v, {2, 0, 0}, val));
    }
    CHECK(has_projective_zero(ProjectiveVariety{fs, {0, 1, 2}}, grid));
  }
}

TEST_CASE("dim_leq and projective_dimension") {
  auto v = make_vars({"x0", "x1", "x2"});
  auto plane_line = proj(v, {"x0"});
  CHECK(dim_leq(plane_line, 1, grid));
  CHECK_FALSE(dim_leq(plane_line, 0, grid));
  CHECK(dim_leq(proj(v, {"x0", "x1"}), 0, grid));
  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  CHECK(dim_leq(tc, 1, grid));
  CHECK_FALSE(dim_leq(tc, 0, grid));
  CHECK(dim_leq(tc, 2, grid));
  CHECK(projective_dimension(tc, grid) == 1);
  CHECK(projective_dimension(proj(v, {"x0", "x1", "x2"}), grid) == -1);
}

TEST_CASE("twisted cubic slicing matches its parametrization") {
  // A plane a.x meets the curve where the binary cubic a.(s^3, s^2 t, s t^2, t^3)
  // vanishes; two planes meet it iff their cubics share a root (Sylvester).
  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  const auto& v = tc.polys[0].vars();
  auto linear = [&](const std::vector<mpz_class>& a) {
    MPoly f(v);
    for (std::size_t j = 0; j < 4; ++j) f = f + scale(MPoly::variable(v, j), a[j]);
    return f;
  };
  auto with = [&](std::vector<std::vector<mpz_class>> planes) {
    auto W = tc;
    for (auto& a : planes) W.polys.push_back(linear(a));
    return W;
  };
  Rng rng(42);
  for (int t = 0; t < 4; ++t) {
    auto a = oracle::random_vec(rng, 4, 20), b = oracle::random_vec(rng, 4, 20);
    if (t % 2) {
      // Force a common point: both planes through (s^3 : s^2 t : s t^2 : t^3).
      mpz_class s = rng.uniform_mpz(1, 3), u = rng.uniform_mpz(-3, 3);
      std::vector<mpz_class> p{s * s * s, s * s * u, s * u * u, u * u * u};
      a = oracle::orthogonal(p, a);
      b = oracle::orthogonal(p, b);
    }
    // Coefficients of the cubic in s (low to high) with t = 1.
    std::vector<mpz_class> ca{a[3], a[2], a[1], a[0]}, cb{b[3], b[2], b[1], b[0]};
    const bool meets = oracle::det(oracle::sylvester(ca, cb)) == 0;
    CHECK(meets == (t % 2 == 1));
    CHECK(has_projective_zero(with({a, b}), grid) == meets);
    CHECK(has_projective_zero(with({a}), grid));
  }
}

TEST_CASE("dim_projection: products, coordinate cones, inner product") {
  auto pair = fixtures::multiproj(fixtures::kConicPair);
  CHECK(dim_projection(pair, {0}, grid) == 1);
  CHECK(dim_projection(pair, {1}, grid) == 1);
  CHECK(dim_projection(pair, {0, 1}, grid) == 2);

  auto v = make_vars({"x0", "x1", "x2", "y0", "y1"}, {{0, 1, 2}, {3, 4}});
  MultiprojVariety cone{{parse_poly("x1", v), parse_poly("x2", v)}, {{0, 1, 2}, {3, 4}}, 1};
  CHECK(dim_projection(cone, {0}, grid) == 0);
  CHECK(dim_projection(cone, {1}, grid) == 1);
  CHECK(dim_projection(cone, {0, 1}, grid) == 1);

  auto ip = inner_product(1);
  CHECK(dim_projection(ip, {0}, grid) == 1);
  CHECK(dim_projection(ip, {1}, grid) == 1);
  CHECK(dim_projection(ip, {0, 1}, grid) == 1);
}

TEST_CASE("projection dimensions: full set, monotone, submodular") {
  const std::vector<std::pair<MultiprojVariety, int>> cases{
      {fixtures::multiproj(fixtures::kConicPair), 2}, {inner_product(1), 1}, {inner_product(2), 3}};
  for (const auto& [V, dim] : cases) {
    auto t = dim_table(V, grid);
    CHECK(t.at(3) == dim);
    CHECK(is_submodular(as_fn(t, 2)));
  }
}

TEST_CASE("dim_leq is monotone in r") {
  auto v = make_vars({"x0", "x1", "x2", "x3"});
  for (const auto& V : {proj(v, {"x0*x1 - x2*x3"}), proj(v, {"x0", "x1*x2"}), fixtures::projective(fixtures::kTwistedCubic)}) {
    bool prev = false;
    for (int r = 0; r <= 3; ++r) {
      bool now = dim_leq(V, r, grid);
      CHECK((!prev || now));
      prev = now;
    }
    CHECK(prev);
  }
}
