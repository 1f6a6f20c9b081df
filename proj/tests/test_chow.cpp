#include <doctest.h>

#include "chowkit/chow.hpp"
#include "chowkit/errors.hpp"
#include "chowkit/gcd.hpp"
#include "chowkit/poly_text.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

IntMat plane(const std::vector<std::vector<mpz_class>>& rows) {
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<mpz_class> cubic_point(const mpz_class& s, const mpz_class& t) { return {s * s * s, s * s * t, s * t * t, t * t * t}; }

}  // namespace

TEST_CASE("chow_form_ci: point, line and the conic cross-product oracle") {
  auto pt = chow_form_ci(fixtures::projective(fixtures::kPoint), 0);
  CHECK(to_string(pt.poly) == "u00");
  auto line = chow_form_ci(fixtures::projective(fixtures::kLine), 1);
  CHECK(to_string(line.poly) == "u00*u11 - u01*u10");
  CHECK(line.degrees == std::vector<int>{1, 1});

  for (const char* src : {fixtures::kConic, fixtures::kCircle}) {
    auto V = fixtures::projective(src);
    auto cf = chow_form_ci(V, 1);
    const auto& u = cf.poly.vars();
    auto f = V.polys[0];
    auto ref = normalize(oracle::substitute(f, oracle::symbolic_cross(u), u));
    CHECK(cf.poly == ref);
    CHECK(cf.degrees == std::vector<int>{2, 2});
  }
}

TEST_CASE("chow_form_ci rejects a wrong number of polynomials") {
  auto V = fixtures::projective(fixtures::kLine);
  CHECK_THROWS_AS(chow_form_ci(V, 2), UsageError);
  auto v = make_vars({"x0", "x1", "x2"});
  ProjectiveVariety three{{parse_poly("x0", v), parse_poly("x1", v), parse_poly("x2", v)}, {0, 1, 2}};
  CHECK_THROWS_AS(chow_form_ci(three, 0), UsageError);
}

TEST_CASE("degree_equalize") {
  auto v = make_vars({"x0", "x1"});
  ProjectiveVariety V{{parse_poly("x0", v), parse_poly("x1^2", v)}, {0, 1}};
  auto E = degree_equalize(V);
  REQUIRE(E.polys.size() == 3);
  CHECK(E.polys[0] == parse_poly("x0^2", v));
  CHECK(E.polys[1] == parse_poly("x0*x1", v));
  CHECK(E.polys[2] == parse_poly("x1^2", v));

  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  CHECK(degree_equalize(tc).polys == tc.polys);

  // Same zero set on sampled points: a point kills all of E iff it kills V.
  auto w = make_vars({"x0", "x1", "x2"});
  ProjectiveVariety M{{parse_poly("x0 - x1", w), parse_poly("x1*x2 - x0^2", w)}, {0, 1, 2}};
  auto ME = degree_equalize(M);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        std::vector<mpz_class> p{a, b, c};
        auto zero = [&](const ProjectiveVariety& X) {
          for (const auto& f : X.polys)
            if (oracle::evaluate(f, p) != 0) return false;
          return true;
        };
        CHECK(zero(M) == zero(ME));
      }
}

TEST_CASE("generic_lc on the twisted cubic") {
  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  auto ls = generic_lc(tc, 1, RandomGrid{3, 1 << 15, 3});
  REQUIRE(ls.size() == 2);
  IntMat Xi(4, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(ls[i].lambda.rows == 2);
    CHECK(ls[i].lambda.cols == 3);
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 3; ++j) Xi(2 * i + k, j) = ls[i].lambda(k, j);
  }
  CHECK(rank(Xi) == 3);
  // Repeated rows can never reach full rank.
  auto v = tc.polys[0].vars();
  ProjectiveVariety same{{tc.polys[0], tc.polys[0], tc.polys[0]}, tc.x, 1};
  CHECK_THROWS_AS(generic_lc(same, 1, RandomGrid{3, 1 << 15, 1}), IndeterminateError);
}

TEST_CASE("chow_form: twisted cubic through the gcd path") {
  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  auto cf = chow_form(tc, 1, RandomGrid{0, 1 << 15, 3});
  CHECK(cf.degrees == std::vector<int>{3, 3});
  CHECK(cf.provenance == "gcd-of-2");
  CHECK(square_free_part(cf.poly) == cf.poly);
  auto b = chow_bounds(tc, 1);
  CHECK(b.per_block >= 3);

  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    auto p = cubic_point(rng.uniform_mpz(-4, 4), rng.uniform_mpz(1, 4));
    auto u0 = oracle::orthogonal(p, oracle::random_vec(rng, 4, 30));
    auto u1 = oracle::orthogonal(p, oracle::random_vec(rng, 4, 30));
    CHECK(evaluate_on_plane(cf, plane({u0, u1})) == 0);
    CHECK(evaluate_on_plane(cf, plane({oracle::random_vec(rng, 4, 30), oracle::random_vec(rng, 4, 30)})) != 0);
  }
  // Rank-deficient configurations always vanish.
  auto w = oracle::random_vec(rng, 4, 30);
  std::vector<mpz_class> w2;
  for (auto& x : w) w2.push_back(3 * x);
  CHECK(evaluate_on_plane(cf, plane({w, w2})) == 0);

  // Different seeds, same normalized form.
  CHECK(chow_form(tc, 1, RandomGrid{99, 1 << 15, 3}).poly == cf.poly);
}

TEST_CASE("chow_form: a gcd of two reducible complete intersections strips the extra lines") {
  // V(f1, f2) is the cubic plus the line x1 = x2 = 0; V(f1, f3) is the cubic
  // plus the line x0 = x1 = 0.
  auto tc = fixtures::projective(fixtures::kTwistedCubic);
  ProjectiveVariety a{{tc.polys[0], tc.polys[1]}, tc.x, 1}, b{{tc.polys[0], tc.polys[2]}, tc.x, 1};
  auto fa = chow_form_ci(a, 1), fb = chow_form_ci(b, 1);
  CHECK(fa.degrees == std::vector<int>{4, 4});
  CHECK(fb.degrees == std::vector<int>{4, 4});
  auto g = gcd(fa.poly, fb.poly);
  CHECK(normalize(g) == chow_form(tc, 1).poly);
}

TEST_CASE("chow_form on complete intersections matches chow_form_ci") {
  for (const char* src : {fixtures::kLine, fixtures::kConic, fixtures::kCircle}) {
    auto V = fixtures::projective(src);
    const int r = static_cast<int>(V.n() - V.polys.size());
    CHECK(chow_form(V, r).poly == chow_form_ci(V, r).poly);
  }
}

TEST_CASE("SL-invariance of Chow forms") {
  Rng rng(52);
  for (const char* src : {fixtures::kLine, fixtures::kConic, fixtures::kTwistedCubic}) {
    auto p = parse_problem(src);
    auto V = as_projective(p);
    const int r = p.dim ? *p.dim : static_cast<int>(V.n() - V.polys.size());
    auto cf = chow_form(V, r);
    const auto& u = cf.poly.vars();
    for (int t = 0; t < 5; ++t) {
      auto A = oracle::unimodular(r + 1, rng, 6);
      CHECK(oracle::substitute(cf.poly, oracle::act_on_blocks(u, A), u) == cf.poly);
    }
  }
}

TEST_CASE("chow_bounds") {
  auto b = chow_bounds(3, 2, 1);
  CHECK(b.per_block == 4);
  CHECK(b.macaulay_dim == 20);
  CHECK(chow_bounds(3, 5, 2).per_block == 5);
  CHECK(chow_bounds(4, 1, 1).per_block == 1);
  CHECK_THROWS_AS(chow_bounds(3, 2, 3), UsageError);
}

TEST_CASE("u-variable naming") {
  CHECK(u_name(0, 1, 2, 3) == "u01");
  CHECK(u_name(3, 11, 4, 11) == "u3_11");
  auto u = u_blocks(2, 2);
  CHECK(u->size() == 6);
  CHECK(u->block_count() == 2);
  CHECK(u->name(4) == "u11");
}
