#include "chowkit/upoly.hpp"

#include <algorithm>

#include "chowkit/errors.hpp"

namespace ck {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

UPoly uscale(const UPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  UPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

UPoly uderiv(const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

mpz_class ueval(const UPoly& a, const mpz_class& z) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc *= z;
    acc += a[i];
  }
  return acc;
}

mpz_class ucontent(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly uprimitive(const UPoly& a) {
  if (a.empty()) return a;
  mpz_class g = ucontent(a);
  if (a.back() < 0) g = -g;
  UPoly r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

UPoly uprem(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw UsageError("pseudo-remainder by zero");
  UPoly r(a);
  const int db = udeg(b);
  const mpz_class& lb = b.back();
  int dr = udeg(r);
  int e = std::max(dr - db + 1, 0);
  while (dr >= db) {
    mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
    trim(r);
    --e;
    dr = udeg(r);
  }
  if (e > 0) {
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : r) x *= m;
  }
  return r;
}

bool udiv_exact(const UPoly& a, const UPoly& b, UPoly& q) {
  if (b.empty()) throw UsageError("division by zero polynomial");
  q.clear();
  if (a.empty()) return true;
  UPoly r(a);
  const int db = udeg(b);
  if (udeg(r) < db) return false;
  q.assign(r.size() - b.size() + 1, 0);
  while (!r.empty() && udeg(r) >= db) {
    int k = udeg(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
    q[k] = c;
    trim(r);
  }
  trim(q);
  return r.empty();
}

UPoly ugcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = uprimitive(a0), b = uprimitive(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprimitive(uprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return uprimitive(a);
}

UPoly interpolate_lagrange(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw UsageError("interpolation: size mismatch");
  if (n == 0) return {};
  // master(z) = prod (z - x_j)
  UPoly master{1};
  for (const auto& xj : x) master = umul(master, UPoly{-xj, 1});
  // w_i = prod_{j != i} (x_i - x_j); common denominator L = lcm |w_i|.
  std::vector<mpz_class> w(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        if (x[i] == x[j]) throw UsageError("interpolation nodes must be distinct");
        w[i] *= x[i] - x[j];
      }
  mpz_class L = 1;
  for (const auto& wi : w) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), wi.get_mpz_t());
  UPoly acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    mpz_class s;
    mpz_divexact(s.get_mpz_t(), L.get_mpz_t(), w[i].get_mpz_t());
    s *= y[i];
    // basis = master / (z - x_i), synthetic division from the top.
    mpz_class carry = 0;
    for (std::size_t k = n; k-- > 0;) {
      carry = master[k + 1] + carry * x[i];
      acc[k] += s * carry;
    }
  }
  for (auto& c : acc) {
    if (!mpz_divisible_p(c.get_mpz_t(), L.get_mpz_t()))
      throw InternalError("interpolant has non-integer coefficients");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), L.get_mpz_t());
  }
  trim(acc);
  return acc;
}

std::vector<mpz_class> symmetric_nodes(std::size_t count) {
  std::vector<mpz_class> v;
  v.reserve(count);
  for (std::size_t k = 0; v.size() < count; ++k) {
    if (k == 0) {
      v.emplace_back(0);
      continue;
    }
    v.emplace_back(static_cast<long>(k));
    if (v.size() < count) v.emplace_back(-static_cast<long>(k));
  }
  return v;
}

}  // namespace ck
