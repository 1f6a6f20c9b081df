#include "chowkit/intmat.hpp"

#include <utility>

#include "chowkit/errors.hpp"

namespace ck {

IntMat IntMat::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  IntMat s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

mpz_class det_bareiss(IntMat m) {
  if (m.rows != m.cols) throw UsageError("determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1, t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    const mpz_class& piv = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class mik = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), piv.get_mpz_t());
        mpz_submul(t.get_mpz_t(), mik.get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = piv;
  }
  mpz_class d = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-d) : d;
}

namespace {

// Fraction-free row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(IntMat& m) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(p, j));
    const mpz_class piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const mpz_class mic = m(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), piv.get_mpz_t());
        mpz_submul(t.get_mpz_t(), mic.get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    // Columns left of c in rows below r are zero already.
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(IntMat m) { return echelon(m).size(); }

std::vector<std::vector<mpz_class>> nullspace(const IntMat& m0) {
  IntMat m = m0;
  auto piv = echelon(m);
  const std::size_t n = m.cols;
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    // Back substitution over Q with a common denominator.
    std::vector<mpq_class> v(n, 0);
    v[free] = 1;
    for (std::size_t r = piv.size(); r-- > 0;) {
      std::size_t c = piv[r];
      mpq_class s = 0;
      for (std::size_t j = c + 1; j < n; ++j)
        if (v[j] != 0) s += mpq_class(m(r, j)) * v[j];
      v[c] = -s / mpq_class(m(r, c));
    }
    mpz_class den = 1;
    for (auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> w(n);
    mpz_class g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class x = v[j] * den;
      w[j] = x.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
    }
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(w));
  }
  return basis;
}

UPoly pencil_det(const IntMat& A, const IntMat& B, std::size_t max_deg) {
  if (A.rows != A.cols || B.rows != A.rows || B.cols != A.cols) throw UsageError("pencil shape mismatch");
  auto nodes = symmetric_nodes(max_deg + 1);
  std::vector<mpz_class> vals;
  vals.reserve(nodes.size());
  IntMat M(A.rows, A.cols);
  for (const auto& s : nodes) {
    for (std::size_t k = 0; k < A.a.size(); ++k) {
      M.a[k] = A.a[k];
      if (B.a[k] != 0) mpz_addmul(M.a[k].get_mpz_t(), s.get_mpz_t(), B.a[k].get_mpz_t());
    }
    vals.push_back(det_bareiss(M));
  }
  return interpolate_lagrange(nodes, vals);
}

}  // namespace ck
