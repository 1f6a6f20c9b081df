#pragma once

// Reference computations for the tests. They use the library only for MPoly
// storage and ring arithmetic, never for elimination or determinants.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "chowkit/intmat.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/rng.hpp"

namespace oracle {

using ck::ExpVec;
using ck::MPoly;
using ck::Vars;
using Terms = std::map<ExpVec, mpz_class>;

inline Terms terms_of(const MPoly& f) {
  Terms t;
  for (std::size_t i = 0; i < f.nterms(); ++i) t[f.exp_vec(i)] = f.coeff(i);
  return t;
}

inline MPoly from_terms(const Vars& v, const Terms& t) {
  std::vector<std::pair<ExpVec, mpz_class>> raw;
  for (const auto& [e, c] : t)
    if (c != 0) raw.emplace_back(e, c);
  return MPoly::from_terms(v, raw);
}

inline Terms add(const Terms& a, const Terms& b) {
  Terms r = a;
  for (const auto& [e, c] : b) r[e] += c;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// Schoolbook convolution over exponent maps.
inline Terms mul(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r[e] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

inline std::size_t bitlen(const mpz_class& c) { return c == 0 ? 0 : mpz_sizeinbase(c.get_mpz_t(), 2); }

inline std::size_t max_bitlen(const MPoly& f) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < f.nterms(); ++i) b = std::max(b, bitlen(f.coeff(i)));
  return b;
}

inline mpz_class evaluate(const MPoly& f, const std::vector<mpz_class>& pt) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    mpz_class t = f.coeff(i);
    for (std::size_t k = 0; k < pt.size(); ++k) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), pt[k].get_mpz_t(), f.exps(i)[k]);
      t *= p;
    }
    s += t;
  }
  return s;
}

// Rational Gaussian elimination.
inline mpz_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d.get_num();
}

inline mpz_class det(const ck::IntMat& a) {
  std::vector<std::vector<mpq_class>> m(a.rows, std::vector<mpq_class>(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = a(i, j);
  return det(m);
}

// Sylvester matrix of p = sum p[k] x^k y^(d-k), q likewise, coefficients low
// to high in x.
inline std::vector<std::vector<mpq_class>> sylvester(const std::vector<mpz_class>& p, const std::vector<mpz_class>& q) {
  const std::size_t d = p.size() - 1, e = q.size() - 1, n = d + e;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t k = 0; k <= d; ++k) m[i][i + k] = p[d - k];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k <= e; ++k) m[e + i][i + k] = q[e - k];
  return m;
}

inline std::vector<mpz_class> cross(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A vector orthogonal to p, built from w and a helper q with q.p != 0.
inline std::vector<mpz_class> orthogonal(const std::vector<mpz_class>& p, const std::vector<mpz_class>& w) {
  std::vector<mpz_class> q(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) {
      q[i] = 1;
      break;
    }
  const mpz_class qp = dot(q, p), wp = dot(w, p);
  std::vector<mpz_class> u(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) u[i] = qp * w[i] - wp * q[i];
  return u;
}

inline std::vector<mpz_class> random_vec(ck::Rng& rng, std::size_t n, long h) {
  std::vector<mpz_class> v(n);
  for (auto& x : v) x = rng.uniform_mpz(-h, h);
  return v;
}

// Random polynomial with up to `terms` terms of total degree <= deg and
// coefficients below 2^bits (bits <= 62).
inline MPoly random_poly(const Vars& v, ck::Rng& rng, int terms, int deg, int bits) {
  std::vector<std::pair<ExpVec, mpz_class>> raw;
  for (int t = 0; t < terms; ++t) {
    ExpVec e(v->size(), 0);
    int left = static_cast<int>(rng.uniform(0, deg));
    for (std::size_t k = 0; k < e.size() && left > 0; ++k) {
      int x = static_cast<int>(rng.uniform(0, left));
      e[rng.uniform(0, static_cast<std::int64_t>(e.size()) - 1)] += x;
      left -= x;
    }
    mpz_class c = rng.uniform_mpz(1, (std::int64_t{1} << bits) - 1);
    if (rng.uniform(0, 1)) c = -c;
    raw.emplace_back(e, c);
  }
  return MPoly::from_terms(v, raw);
}

// Classical discriminant of a x^3 + b x^2 y + c x y^2 + d y^3.
inline mpz_class cubic_discriminant(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

// Random integer matrix of determinant 1 as a product of elementary moves.
inline std::vector<std::vector<mpz_class>> unimodular(std::size_t k, ck::Rng& rng, int moves) {
  std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k, 0));
  for (std::size_t i = 0; i < k; ++i) a[i][i] = 1;
  if (k < 2) return a;
  for (int t = 0; t < moves; ++t) {
    auto i = static_cast<std::size_t>(rng.uniform(0, k - 1)), j = static_cast<std::size_t>(rng.uniform(0, k - 2));
    if (j >= i) ++j;
    const long c = static_cast<long>(rng.uniform(-3, 3));
    for (std::size_t col = 0; col < k; ++col) a[i][col] += c * a[j][col];
  }
  return a;
}

// f with variable k replaced by images[k] (images over a common table).
inline MPoly substitute(const MPoly& f, const std::vector<MPoly>& images, const Vars& target) {
  MPoly out(target);
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    MPoly term = MPoly::constant(target, f.coeff(t));
    for (std::size_t k = 0; k < f.nvars(); ++k)
      for (int e = 0; e < f.exps(t)[k]; ++e) term = term * images[k];
    out = out + term;
  }
  return out;
}

// The intersection point u0 x u1 of two lines in P^2, over the u-table of a
// Chow form with blocks (u00 u01 u02)(u10 u11 u12).
inline std::vector<MPoly> symbolic_cross(const Vars& u) {
  auto var = [&](std::size_t b, std::size_t j) { return MPoly::variable(u, u->block(b)[j]); };
  return {var(0, 1) * var(1, 2) - var(0, 2) * var(1, 1), var(0, 2) * var(1, 0) - var(0, 0) * var(1, 2),
          var(0, 0) * var(1, 1) - var(0, 1) * var(1, 0)};
}

// Images of the u variables under u_i -> sum_k A_ik u_k.
inline std::vector<MPoly> act_on_blocks(const Vars& u, const std::vector<std::vector<mpz_class>>& A) {
  std::vector<MPoly> img(u->size(), MPoly(u));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < u->block(i).size(); ++j)
      for (std::size_t k = 0; k < A.size(); ++k)
        if (A[i][k] != 0) img[u->block(i)[j]] = img[u->block(i)[j]] + ck::scale(MPoly::variable(u, u->block(k)[j]), A[i][k]);
  return img;
}

}  // namespace oracle
