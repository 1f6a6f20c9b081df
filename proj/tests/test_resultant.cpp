#include <doctest.h>

#include <set>

#include "chowkit/errors.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/resultant.hpp"
#include "chowkit/toric.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

std::vector<MPoly> polys(const Vars& v, const std::vector<std::string>& src) {
  std::vector<MPoly> out;
  for (const auto& s : src) out.push_back(parse_poly(s, v));
  return out;
}

MPoly binary_form(const Vars& v, const std::vector<mpz_class>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<std::pair<ExpVec, mpz_class>> t;
  for (int k = 0; k <= d; ++k) t.push_back({ExpVec{k, d - k}, c[k]});
  return MPoly::from_terms(v, t);
}

std::vector<mpz_class> random_coeffs(Rng& rng, int d, int bits) {
  std::vector<mpz_class> c(d + 1);
  for (auto& x : c) x = rng.uniform_mpz(-(1L << bits) + 1, (1L << bits) - 1);
  if (c[d] == 0) c[d] = 1;
  return c;
}

// Sum c_j x^j for the 2x2 minors obtained by eliminating y from three
// bilinear forms; coefficient vectors indexed [form][x-index][y-index].
using Bilinear = std::vector<std::array<std::array<mpz_class, 2>, 2>>;

bool bilinear_common_zero(const Bilinear& f) {
  // Each form is (a_i x0 + b_i x1) y0 + (c_i x0 + d_i x1) y1. A common zero in y
  // for a fixed x exists iff the 3x2 matrix in y has rank < 2: the three 2x2
  // minors (binary quadratics in x) share a root.
  std::vector<std::vector<mpz_class>> minors;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      // (p_i q_j - p_j q_i) with p = coefficient of y0, q = coefficient of y1,
      // each linear in x: p = p0 x0 + p1 x1.
      auto p = [&](int k, int xi) { return f[k][xi][0]; };
      auto q = [&](int k, int xi) { return f[k][xi][1]; };
      std::vector<mpz_class> m(3);  // coefficients of x1^0 x0^2, x0 x1, x1^2
      m[0] = p(i, 0) * q(j, 0) - p(j, 0) * q(i, 0);
      m[1] = p(i, 0) * q(j, 1) + p(i, 1) * q(j, 0) - p(j, 0) * q(i, 1) - p(j, 1) * q(i, 0);
      m[2] = p(i, 1) * q(j, 1) - p(j, 1) * q(i, 1);
      minors.push_back(m);
    }
  // Common root of three binary quadratics: gcd over Q is nonconstant. Use the
  // Sylvester resultant of the first nonzero pair, then check the third via a
  // pairwise gcd computed with rational arithmetic.
  auto is_zero = [](const std::vector<mpz_class>& m) { return m[0] == 0 && m[1] == 0 && m[2] == 0; };
  std::vector<std::vector<mpz_class>> nz;
  for (auto& m : minors)
    if (!is_zero(m)) nz.push_back(m);
  if (nz.empty()) return true;
  // Roots of the first nonzero minor, tested exactly on the others by pairwise
  // resultants: a shared root of all iff the gcd of all has degree >= 1.
  // Degree-2 forms in (x0, x1): compute the gcd with the Euclidean algorithm
  // over Q on the dehomogenization in x0 = t, x1 = 1, tracking roots at
  // infinity (x1 = 0) separately.
  bool inf_all = true;
  for (auto& m : nz) inf_all = inf_all && m[0] == 0;
  if (inf_all) return true;
  using Q = std::vector<mpq_class>;  // coefficients of t^0..t^2 with x0 = t
  auto to_q = [](const std::vector<mpz_class>& m) { return Q{m[2], m[1], m[0]}; };
  auto trim = [](Q& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  };
  auto rem = [&](Q a, Q b) {
    trim(a);
    trim(b);
    while (a.size() >= b.size() && !a.empty()) {
      mpq_class f = a.back() / b.back();
      std::size_t sh = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[sh + k] -= f * b[k];
      trim(a);
    }
    return a;
  };
  Q g = to_q(nz[0]);
  trim(g);
  for (std::size_t k = 1; k < nz.size(); ++k) {
    Q b = to_q(nz[k]);
    trim(b);
    while (!b.empty()) {
      Q r = rem(g, b);
      g = b;
      b = r;
    }
  }
  return g.size() >= 2;
}

}  // namespace

TEST_CASE("macaulay_matrix: linear forms, Sylvester shape, ternary quadrics") {
  auto v = make_vars({"x0", "x1", "x2"});
  auto lin = macaulay_matrix({polys(v, {"2*x0 + x1", "x1 - 3*x2", "x0 + x1 + x2"}), {0, 1, 2}});
  CHECK(lin.M.dim() == 3);
  CHECK(lin.M0.dim() == 0);
  CHECK(lin.critical_degree == 1);

  auto b = make_vars({"x0", "x1"});
  Rng rng(31);
  for (int d = 1; d <= 4; ++d)
    for (int e = 1; e <= 4; ++e) {
      auto p = random_coeffs(rng, d, 6), q = random_coeffs(rng, e, 6);
      auto mm = macaulay_matrix({{binary_form(b, p), binary_form(b, q)}, {0, 1}});
      REQUIRE(mm.M.dim() == static_cast<std::size_t>(d + e));
      // Same rows as the Sylvester matrix up to order: compare determinants
      // up to sign and row multisets.
      auto syl = oracle::sylvester(p, q);
      std::multiset<std::vector<mpz_class>> rows_m, rows_s;
      for (std::size_t i = 0; i < mm.M.dim(); ++i) {
        std::vector<mpz_class> r;
        for (std::size_t j = 0; j < mm.M.dim(); ++j) r.push_back(mm.M(i, j).is_zero() ? 0 : mm.M(i, j).coeff(0));
        rows_m.insert(r);
        std::vector<mpz_class> s;
        for (auto& x : syl[i]) s.push_back(x.get_num());
        rows_s.insert(s);
      }
      CHECK(rows_m == rows_s);
    }

  auto quad = macaulay_matrix({polys(v, {"x0^2 + x1*x2", "x1^2 - x0*x2", "x2^2 + 3*x0*x1"}), {0, 1, 2}});
  CHECK(quad.M.dim() == 15);
  CHECK(quad.critical_degree == 4);
}

TEST_CASE("macaulay_matrix rejects constant polynomials") {
  auto v = make_vars({"x0", "x1"});
  CHECK_THROWS_AS(macaulay_matrix({polys(v, {"3", "x0"}), {0, 1}}), UsageError);
}

TEST_CASE("resultant_dense: small cases and the Sylvester oracle") {
  auto v = make_vars({"x0", "x1", "x2", "a", "b"});
  auto lin = polys(v, {"a*x0 + x1", "x1 - 3*x2", "x0 + b*x1 + x2"});
  auto R = resultant_dense({lin, {0, 1, 2}});
  auto pv = param_vars(v, {0, 1, 2});
  // Coefficient determinant of [[a,1,0],[0,1,-3],[1,b,1]].
  auto ref = parse_poly("a*(1 + 3*b) - 3", pv);
  CHECK((R == ref || R == -ref));

  auto b = make_vars({"x0", "x1"});
  CHECK(resultant_dense({polys(b, {"x0 - x1", "x0 - x1"}), {0, 1}}).is_zero());

  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(rng.uniform(1, 4)), e = static_cast<int>(rng.uniform(1, 4));
    auto p = random_coeffs(rng, d, 8), q = random_coeffs(rng, e, 8);
    auto r = resultant_dense({{binary_form(b, p), binary_form(b, q)}, {0, 1}});
    const mpz_class s = oracle::det(oracle::sylvester(p, q));
    const mpz_class got = r.is_zero() ? mpz_class(0) : r.coeff(0);
    CHECK(abs(got) == abs(s));
  }
}

TEST_CASE("gcp_resultant: agrees with the dense quotient and handles degenerate minors") {
  auto v = make_vars({"x0", "x1", "x2", "a", "b", "c"});
  auto sys = MacaulaySystem{polys(v, {"a*x0^2 + x1*x2", "x1^2 - b*x0*x2", "c*x2 + x0"}), {0, 1, 2}};
  CHECK(gcp_resultant(sys) == normalize(resultant_dense(sys)));

  auto b = make_vars({"x0", "x1"});
  auto sq = MacaulaySystem{polys(b, {"x0^2", "x1^2"}), {0, 1}};
  CHECK(gcp_resultant(sq) == parse_poly("1", param_vars(b, {0, 1})));
  // The Sylvester determinant of the perturbed pair at s = 0 is 1.
  CHECK(abs(oracle::det(oracle::sylvester({0, 0, 1}, {1, 0, 0}))) == 1);
}

TEST_CASE("resultant vanishes on systems with a constructed common root") {
  auto v = make_vars({"x0", "x1", "x2"});
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    // Random quadrics and a linear form, each shifted to vanish at p.
    std::vector<mpz_class> p = oracle::random_vec(rng, 3, 4);
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) p[0] = 1;
    std::vector<MPoly> fs;
    for (int deg : {2, 2, 1}) {
      std::vector<std::pair<ExpVec, mpz_class>> terms;
      for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) terms.push_back({ExpVec{i, j, deg - i - j}, rng.uniform_mpz(-9, 9)});
      auto f = MPoly::from_terms(v, terms);
      mpz_class val = oracle::evaluate(f, p);
      // Subtract val * (x_k / p_k)^deg scaled to stay integral.
      std::size_t k = p[0] != 0 ? 0 : p[1] != 0 ? 1 : 2;
      mpz_class pk = 1;
      for (int i = 0; i < deg; ++i) pk *= p[k];
      ExpVec e(3, 0);
      e[k] = deg;
      f = scale(f, pk) - MPoly::monomial(v, e, val);
      REQUIRE(oracle::evaluate(f, p) == 0);
      fs.push_back(f);
    }
    MacaulaySystem sys{fs, {0, 1, 2}};
    CHECK(resultant_vanishes(sys));
    CHECK(resultant_dense(sys).is_zero());
  }
}

TEST_CASE("bezout_bounds") {
  auto v = make_vars({"x0", "x1", "x2", "x3"});
  auto sys = MacaulaySystem{polys(v, {"x0^2", "x1^2", "x2", "x3"}), {0, 1, 2, 3}};
  CHECK(bezout_bounds(sys) == std::vector<long long>{2, 2, 4, 4});
  auto lin = MacaulaySystem{polys(v, {"x0", "x1", "x2", "x3"}), {0, 1, 2, 3}};
  CHECK(bezout_bounds(lin) == std::vector<long long>{1, 1, 1, 1});

  auto w = make_vars({"x0", "x1", "y0", "y1"}, {{0, 1}, {2, 3}});
  MultiResSystem bil{polys(w, {"x0*y0", "x1*y1", "x0*y1 + x1*y0"}), {{0, 1}, {2, 3}}};
  // Two (1,1)-forms on P1 x P1 meet in 2!/(1!1!) = 2 points.
  CHECK(bezout_bounds(bil) == std::vector<long long>{2, 2, 2});
}

TEST_CASE("resultant_multihomogeneous: single block matches the dense resultant") {
  auto v = make_vars({"x0", "x1", "x2", "a", "b"});
  auto fs = polys(v, {"a*x0 + x1 - x2", "x0 + b*x2", "x0^2 + x1*x2 - a*x2^2"});
  auto dense = normalize(resultant_dense({fs, {0, 1, 2}}));
  auto multi = normalize(resultant_multihomogeneous({fs, {{0, 1, 2}}}));
  CHECK(multi == dense);
}

TEST_CASE("resultant_multihomogeneous: bilinear systems on P1 x P1") {
  auto w = make_vars({"x0", "x1", "y0", "y1"}, {{0, 1}, {2, 3}});
  // No x0*y0 term anywhere: ((1:0),(1:0)) is a common zero.
  MultiResSystem shared{polys(w, {"x0*y1 + 2*x1*y0", "x1*y1 - x0*y1", "3*x1*y0 + x1*y1"}), {{0, 1}, {2, 3}}};
  CHECK(multihomogeneous_resultant_vanishes(shared));

  Rng rng(34);
  int agree = 0;
  for (int t = 0; t < 20; ++t) {
    Bilinear f(3);
    std::vector<MPoly> fs;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::pair<ExpVec, mpz_class>> terms;
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
          f[i][a][c] = rng.uniform_mpz(-3, 3);
          ExpVec e(4, 0);
          e[a] = 1;
          e[2 + c] = 1;
          terms.push_back({e, f[i][a][c]});
        }
      fs.push_back(MPoly::from_terms(w, terms));
    }
    if (std::any_of(fs.begin(), fs.end(), [](const MPoly& g) { return g.is_zero(); })) continue;
    const bool oracle_zero = bilinear_common_zero(f);
    CHECK(multihomogeneous_resultant_vanishes({fs, {{0, 1}, {2, 3}}}, 7) == oracle_zero);
    ++agree;
  }
  CHECK(agree >= 10);
}
