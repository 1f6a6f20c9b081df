#include "chowkit/gcd.hpp"

#include <algorithm>

#include "chowkit/errors.hpp"
#include "chowkit/upoly.hpp"

namespace ck {

namespace {

using Coeffs = std::vector<MPoly>;  // polynomial in the main variable

int cdeg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

void ctrim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

MPoly from_coeffs(const Coeffs& a, std::size_t var, const Vars& vars) {
  MPoly acc(vars);
  ExpVec e(vars->size(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    e[var] = static_cast<Exp>(k);
    acc = add(acc, mul_monomial(a[k], e));
  }
  return acc;
}

// lc(b)^(deg a - deg b + 1) * a mod b
Coeffs prem(Coeffs a, const Coeffs& b) {
  const int db = cdeg(b);
  const MPoly& lb = b.back();
  int e = cdeg(a) - db + 1;
  while (!a.empty() && cdeg(a) >= db) {
    MPoly la = a.back();
    int shift = cdeg(a) - db;
    for (auto& c : a) c = mul(c, lb);
    for (int i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(la, b[i]));
    ctrim(a);
    --e;
  }
  if (e > 0) {
    MPoly m = pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c = mul(c, m);
  }
  return a;
}

bool uses_var(const MPoly& f, std::size_t v) {
  for (std::size_t t = 0; t < f.nterms(); ++t)
    if (f.exps(t)[v]) return true;
  return false;
}

MPoly gcd_rec(const MPoly& f, const MPoly& g);

MPoly content_list(std::vector<MPoly> cs) {
  std::sort(cs.begin(), cs.end(), [](const MPoly& a, const MPoly& b) { return a.nterms() < b.nterms(); });
  MPoly acc(cs.front().vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? normalize(c) : gcd_rec(acc, c);
    if (acc.is_constant()) return MPoly::constant(acc.vars(), 1);
  }
  return acc;
}

// Restriction to a pseudo-random line; used as a cheap coprimality certificate.
UPoly on_line(const MPoly& f, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const std::size_t n = f.nvars();
  UPoly acc;
  std::vector<UPoly> lin(n);
  for (std::size_t k = 0; k < n; ++k) lin[k] = UPoly{a[k], b[k]};
  DegreeProfile d = mdeg(f);
  std::vector<std::vector<UPoly>> pw(n);
  for (std::size_t k = 0; k < n; ++k) {
    pw[k].push_back(UPoly{1});
    for (int j = 1; j <= d.var_deg[k]; ++j) pw[k].push_back(umul(pw[k].back(), lin[k]));
  }
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    UPoly term{f.coeff(t)};
    for (std::size_t k = 0; k < n; ++k)
      if (f.exps(t)[k]) term = umul(term, pw[k][f.exps(t)[k]]);
    acc = uadd(acc, term);
  }
  return acc;
}

void line_params(std::size_t n, std::vector<mpz_class>& a, std::vector<mpz_class>& b, unsigned salt) {
  // Fixed pseudo-random integers; results are certificates only, never answers.
  unsigned long s = 0x2545F491u + salt * 7919u;
  a.resize(n);
  b.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    a[k] = static_cast<long>((s >> 33) % 61) - 30;
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    b[k] = static_cast<long>((s >> 33) % 59) - 29;
  }
}

bool certified_coprime(const MPoly& f, const MPoly& g) {
  std::vector<mpz_class> a, b;
  line_params(f.nvars(), a, b, 1);
  UPoly fl = on_line(f, a, b), gl = on_line(g, a, b);
  if (udeg(fl) != mdeg(f).total || udeg(gl) != mdeg(g).total) return false;
  return udeg(ugcd(fl, gl)) == 0;
}

MPoly gcd_rec(const MPoly& f0, const MPoly& g0) {
  const Vars& vars = f0.vars();
  MPoly f = primitive(f0), g = primitive(g0);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant()) return MPoly::constant(vars, 1);
  if (f == g) return f;
  if (certified_coprime(f, g)) return MPoly::constant(vars, 1);

  const std::size_t n = f.nvars();
  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < n; ++v) {
    bool inf = uses_var(f, v), ing = uses_var(g, v);
    if (inf && !ing) return gcd_rec(content_in(f, v), g);
    if (ing && !inf) return gcd_rec(f, content_in(g, v));
  }
  // Main variable: smallest maximum degree among shared variables.
  std::size_t x = n;
  int best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    int df = degree_in(f, v), dg = degree_in(g, v);
    if (df <= 0 || dg <= 0) continue;
    int m = std::max(df, dg);
    if (x == n || m < best) {
      x = v;
      best = m;
    }
  }
  if (x == n) return MPoly::constant(vars, 1);

  MPoly cf = content_in(f, x), cg = content_in(g, x);
  MPoly c = gcd_rec(cf, cg);
  Coeffs A = coefficients_in(divide_or_throw(f, cf), x);
  Coeffs B = coefficients_in(divide_or_throw(g, cg), x);
  if (cdeg(A) < cdeg(B)) std::swap(A, B);

  // Subresultant PRS.
  MPoly gg = MPoly::constant(vars, 1), h = MPoly::constant(vars, 1);
  for (;;) {
    const int delta = cdeg(A) - cdeg(B);
    Coeffs R = prem(A, B);
    if (R.empty()) break;
    if (cdeg(R) == 0) {
      B = Coeffs{MPoly::constant(vars, 1)};
      break;
    }
    MPoly div = mul(gg, pow(h, static_cast<unsigned>(delta)));
    for (auto& r : R) r = divide_or_throw(r, div);
    A = std::move(B);
    B = std::move(R);
    gg = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = divide_or_throw(pow(gg, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  MPoly last = from_coeffs(B, x, vars);
  MPoly pp = divide_or_throw(last, content_in(last, x));
  return normalize(mul(c, pp));
}

}  // namespace

MPoly content_in(const MPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  auto cs = coefficients_in(f, var);
  std::vector<MPoly> nz;
  for (auto& c : cs)
    if (!c.is_zero()) nz.push_back(std::move(c));
  return content_list(std::move(nz));
}

MPoly gcd(const MPoly& f, const MPoly& g) {
  if (!same_vars(f.vars(), g.vars())) throw UsageError("gcd: polynomials over different tables");
  if (f.is_zero() && g.is_zero()) throw UsageError("gcd of two zero polynomials");
  return normalize(gcd_rec(f, g));
}

MPoly gcd(const std::vector<MPoly>& fs) {
  if (fs.empty()) throw UsageError("gcd of empty list");
  MPoly acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (acc.is_zero() && fs[i].is_zero()) continue;
    acc = gcd(acc, fs[i]);
  }
  if (acc.is_zero()) throw UsageError("gcd of zero polynomials");
  return normalize(acc);
}

MPoly square_free_part(const MPoly& f) {
  if (f.is_zero()) throw UsageError("square-free part of zero polynomial");
  MPoly p = normalize(f);
  if (p.is_constant()) return MPoly::constant(f.vars(), 1);
  // Certificate: a full-degree restriction to a line that is square-free.
  for (unsigned salt = 2; salt < 4; ++salt) {
    std::vector<mpz_class> a, b;
    line_params(p.nvars(), a, b, salt);
    UPoly pl = on_line(p, a, b);
    if (udeg(pl) == mdeg(p).total) {
      if (udeg(ugcd(pl, uderiv(pl))) == 0) return p;
      break;
    }
  }
  MPoly g = p;
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v) {
    MPoly d = derivative(p, v);
    if (d.is_zero()) continue;
    g = gcd(g, d);
  }
  if (g.is_constant()) return p;
  return normalize(divide_or_throw(p, g));
}

}  // namespace ck
