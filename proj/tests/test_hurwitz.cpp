#include <doctest.h>

#include "chowkit/errors.hpp"
#include "chowkit/gcd.hpp"
#include "chowkit/hurwitz.hpp"
#include "chowkit/poly_text.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

IntMat row(const std::vector<mpz_class>& u) {
  IntMat m(1, u.size());
  for (std::size_t j = 0; j < u.size(); ++j) m(0, j) = u[j];
  return m;
}

std::size_t idx(const Vars& v, const std::string& name) { return *v->index(name); }

}  // namespace

TEST_CASE("u_resultant of a conic matches the parametrized intersection") {
  auto V = fixtures::projective(fixtures::kConic);
  auto R = u_resultant(V, 1);
  const auto& T = R.vars();
  std::vector<std::size_t> m{idx(T, "m0"), idx(T, "m1"), idx(T, "m2")}, u{idx(T, "u10"), idx(T, "u11"), idx(T, "u12")};
  CHECK(is_homogeneous_in(R, m));
  CHECK(degree_in(R, m) == 2);
  // On p = (s^2, st, t^2) the line and M become binary quadratics in (s, t);
  // R is proportional to their Sylvester resultant.
  Rng rng(61);
  mpz_class num = 0, den = 0;
  for (int t = 0; t < 20; ++t) {
    auto uu = oracle::random_vec(rng, 3, 9), mm = oracle::random_vec(rng, 3, 9);
    std::vector<mpz_class> pt(T->size());
    for (int j = 0; j < 3; ++j) {
      pt[u[j]] = uu[j];
      pt[m[j]] = mm[j];
    }
    const mpz_class r = oracle::evaluate(R, pt);
    const mpz_class s = oracle::det(oracle::sylvester({uu[2], uu[1], uu[0]}, {mm[2], mm[1], mm[0]}));
    if (num == 0 && s != 0) {
      num = r;
      den = s;
    }
    CHECK(r * den == s * num);
  }
  CHECK(num != 0);
}

TEST_CASE("u_resultant: degree in m equals the degree of the variety") {
  auto v = make_vars({"x0", "x1", "x2", "x3"});
  ProjectiveVariety two_quadrics{{parse_poly("x0*x1 - x2*x3", v), parse_poly("x0^2 + x1^2 - x2^2 - 2*x3^2", v)}, {0, 1, 2, 3}};
  auto R = u_resultant(two_quadrics, 1);
  std::vector<std::size_t> m;
  for (const char* n : {"m0", "m1", "m2", "m3"}) m.push_back(idx(R.vars(), n));
  CHECK(degree_in(R, m) == ci_degree(two_quadrics));
  CHECK(ci_degree(two_quadrics) == 4);
}

TEST_CASE("degree-one varieties have no Hurwitz form") {
  auto v = make_vars({"x0", "x1", "x2"});
  ProjectiveVariety line{{parse_poly("x0", v)}, {0, 1, 2}};
  CHECK_THROWS_AS(hurwitz_form(line, 1), PreconditionError);
  CHECK_THROWS_AS(u_resultant(line, 1), PreconditionError);
}

TEST_CASE("discriminant_via_partials: quadratic forms, repeated factors, binary cubics") {
  auto q = make_vars({"a", "b", "c", "m0", "m1"});
  auto R1 = parse_poly("a*m0^2 + 2*b*m0*m1 + c*m1^2", q);
  auto D = discriminant_via_partials(R1, {3, 4});
  CHECK(normalize(D) == normalize(parse_poly("a*c - b^2", D.vars())));

  auto rep = parse_poly("a*(m0 + 2*m1)^2", q);
  CHECK(discriminant_via_partials(rep, {3, 4}, DiscriminantMode::plain).is_zero());

  auto c = make_vars({"a", "b", "c", "d", "m0", "m1"});
  auto cubic = parse_poly("a*m0^3 + b*m0^2*m1 + c*m0*m1^2 + d*m1^3", c);
  auto Dc = discriminant_via_partials(cubic, {4, 5});
  Rng rng(62);
  mpz_class num = 0, den = 0;
  for (int t = 0; t < 20; ++t) {
    auto p = oracle::random_vec(rng, 4, 12);
    const mpz_class got = oracle::evaluate(Dc, p);
    const mpz_class ref = oracle::cubic_discriminant(p[0], p[1], p[2], p[3]);
    if (num == 0 && ref != 0) {
      num = got;
      den = ref;
    }
    CHECK(got * den == ref * num);
  }
  CHECK(num != 0);
  CHECK(mdeg(Dc).total == 4);
}

TEST_CASE("hurwitz_form: dual conics with tangency oracles") {
  struct Case {
    const char* src;
    const char* expected;
  };
  for (auto [src, expected] : {Case{fixtures::kConic, "u11^2 - 4*u10*u12"}, Case{fixtures::kCircle, "u10^2 + u11^2 - u12^2"}}) {
    auto V = fixtures::projective(src);
    auto H = hurwitz_form(V, 1);
    CHECK(H.poly == normalize(parse_poly(expected, H.poly.vars())));
    CHECK(H.degrees == std::vector<int>{2});
    CHECK(square_free_part(H.poly) == H.poly);

    const auto& f = V.polys[0];
    Rng rng(63);
    for (int t = 0; t < 50; ++t) {
      const mpz_class s = rng.uniform_mpz(-6, 6), w = rng.uniform_mpz(1, 6), s2 = s + rng.uniform_mpz(1, 5);
      // Rational points of both conics.
      auto point = [&](const mpz_class& a, const mpz_class& b) -> std::vector<mpz_class> {
        if (std::string(src) == fixtures::kConic) return {a * a, a * b, b * b};
        return {a * a - b * b, 2 * a * b, a * a + b * b};
      };
      auto p = point(s, w), p2 = point(s2, w);
      REQUIRE(oracle::evaluate(f, p) == 0);
      std::vector<mpz_class> grad(3);
      for (std::size_t j = 0; j < 3; ++j) grad[j] = oracle::evaluate(derivative(f, j), p);
      CHECK(evaluate_on_plane(H, row(grad)) == 0);
      // The secant through two distinct points meets the conic transversally.
      CHECK(evaluate_on_plane(H, row(oracle::cross(p, p2))) != 0);
    }
  }
}

TEST_CASE("hurwitz_form: circle against the adjugate of its Gram matrix") {
  // The dual of x^T A x is u^T adj(A) u.
  auto V = fixtures::projective(fixtures::kCircle);
  auto H = hurwitz_form(V, 1);
  const auto& u = H.poly.vars();
  // A = diag(1, 1, -1), adj(A) = diag(-1, -1, 1).
  auto ref = parse_poly("-u10^2 - u11^2 + u12^2", u);
  CHECK(H.poly == normalize(ref));
}

TEST_CASE("tangent_planes and small_points") {
  auto V = fixtures::projective(fixtures::kConic);
  auto pts = small_points(V, 2, 10);
  CHECK_FALSE(pts.empty());
  for (const auto& p : pts) CHECK(oracle::evaluate(V.polys[0], p) == 0);
  Rng rng(64);
  auto planes = tangent_planes(V, 1, 5, rng);
  CHECK(planes.size() == 5);
  auto H = hurwitz_form(V, 1);
  for (const auto& P : planes) CHECK(evaluate_on_plane(H, P) == 0);
}
