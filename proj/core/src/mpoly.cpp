#include "chowkit/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "chowkit/errors.hpp"

namespace ck {

VarTable::VarTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> blocks)
    : names_(std::move(names)), blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw UsageError("duplicate variable name '" + names_[i] + "'");
  if (blocks_.empty()) {
    blocks_.emplace_back(names_.size());
    std::iota(blocks_[0].begin(), blocks_[0].end(), std::size_t{0});
  }
  block_of_.assign(names_.size(), SIZE_MAX);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t v : blocks_[b]) {
      if (v >= names_.size()) throw UsageError("block refers to unknown variable index");
      if (block_of_[v] != SIZE_MAX) throw UsageError("variable '" + names_[v] + "' is in two blocks");
      block_of_[v] = b;
    }
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (block_of_[v] == SIZE_MAX) throw UsageError("variable '" + names_[v] + "' is in no block");
}

std::optional<std::size_t> VarTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Vars make_vars(std::vector<std::string> names, std::vector<std::vector<std::size_t>> blocks) {
  return std::make_shared<const VarTable>(std::move(names), std::move(blocks));
}

bool same_vars(const Vars& a, const Vars& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const MPoly& f, const MPoly& g) {
  if (!same_vars(f.vars(), g.vars())) throw UsageError("polynomials live over different variable tables");
}

Exp checked_sum(std::int64_t s) {
  if (s > kMaxExp || s < 0) throw UsageError("exponent overflow (degree beyond 2^31)");
  return static_cast<Exp>(s);
}

struct ExpHash {
  std::size_t operator()(const ExpVec& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Exp x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

int term_order(const VarTable& vars, const Exp* a, const Exp* b) {
  const std::size_t n = vars.size();
  std::int64_t ta = 0, tb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta > tb ? 1 : -1;
  if (vars.block_count() > 1) {
    for (const auto& blk : vars.blocks()) {
      std::int64_t sa = 0, sb = 0;
      for (std::size_t v : blk) {
        sa += a[v];
        sb += b[v];
      }
      if (sa != sb) return sa > sb ? 1 : -1;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

MPoly MPoly::constant(Vars vars, const mpz_class& c) {
  MPoly p(std::move(vars));
  if (c != 0) {
    p.exps_.assign(p.nvars(), 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

MPoly MPoly::variable(Vars vars, std::size_t i) {
  MPoly p(std::move(vars));
  if (i >= p.nvars()) throw UsageError("variable index out of range");
  p.exps_.assign(p.nvars(), 0);
  p.exps_[i] = 1;
  p.coeffs_.emplace_back(1);
  return p;
}

MPoly MPoly::monomial(Vars vars, const ExpVec& e, const mpz_class& c) {
  MPoly p(std::move(vars));
  if (e.size() != p.nvars()) throw UsageError("exponent vector length mismatch");
  for (Exp x : e)
    if (x < 0) throw UsageError("negative exponent");
  if (c != 0) {
    p.exps_ = e;
    p.coeffs_.push_back(c);
  }
  return p;
}

MPoly MPoly::from_terms(Vars vars, std::vector<std::pair<ExpVec, mpz_class>> terms) {
  const std::size_t n = vars->size();
  std::unordered_map<ExpVec, mpz_class, ExpHash> acc;
  acc.reserve(terms.size());
  for (auto& [e, c] : terms) {
    if (e.size() != n) throw UsageError("exponent vector length mismatch");
    for (Exp x : e)
      if (x < 0) throw UsageError("negative exponent");
    acc[e] += c;
  }
  std::vector<const ExpVec*> keys;
  keys.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) keys.push_back(&kv.first);
  const VarTable& vt = *vars;
  std::sort(keys.begin(), keys.end(),
            [&](const ExpVec* a, const ExpVec* b) { return term_order(vt, a->data(), b->data()) > 0; });
  MPoly p(std::move(vars));
  p.exps_.reserve(keys.size() * n);
  p.coeffs_.reserve(keys.size());
  for (const ExpVec* k : keys) {
    p.exps_.insert(p.exps_.end(), k->begin(), k->end());
    p.coeffs_.push_back(acc[*k]);
  }
  return p;
}

MPoly MPoly::from_sorted(Vars vars, std::vector<Exp> exps, std::vector<mpz_class> coeffs) {
  MPoly p(std::move(vars));
  p.exps_ = std::move(exps);
  p.coeffs_ = std::move(coeffs);
  return p;
}

bool MPoly::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() > 1) return false;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (exps_[i] != 0) return false;
  return true;
}

const mpz_class& MPoly::leading_coeff() const {
  if (coeffs_.empty()) throw UsageError("leading coefficient of zero polynomial");
  return coeffs_.front();
}

mpz_class MPoly::coeff_of(const ExpVec& e) const {
  const std::size_t n = nvars();
  // Terms are sorted; binary search on canonical order.
  std::size_t lo = 0, hi = nterms();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = term_order(*vars_, exps(mid), e.data());
    if (c == 0) return coeffs_[mid];
    if (c > 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  (void)n;
  return 0;
}

bool MPoly::operator==(const MPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  if (coeffs_.empty()) return true;
  return same_vars(vars_, o.vars_) && exps_ == o.exps_ && coeffs_ == o.coeffs_;
}

namespace {

// Merge two canonical term lists with coefficient signs sg (for g).
MPoly merge(const MPoly& f, const MPoly& g, bool subtract) {
  const std::size_t n = f.nvars();
  const VarTable& vt = *f.vars();
  std::vector<Exp> e;
  std::vector<mpz_class> c;
  e.reserve((f.nterms() + g.nterms()) * n);
  c.reserve(f.nterms() + g.nterms());
  std::size_t i = 0, j = 0;
  while (i < f.nterms() || j < g.nterms()) {
    int cmp;
    if (i == f.nterms())
      cmp = -1;
    else if (j == g.nterms())
      cmp = 1;
    else
      cmp = term_order(vt, f.exps(i), g.exps(j));
    if (cmp > 0) {
      e.insert(e.end(), f.exps(i), f.exps(i) + n);
      c.push_back(f.coeff(i));
      ++i;
    } else if (cmp < 0) {
      e.insert(e.end(), g.exps(j), g.exps(j) + n);
      c.push_back(subtract ? mpz_class(-g.coeff(j)) : g.coeff(j));
      ++j;
    } else {
      mpz_class s = subtract ? mpz_class(f.coeff(i) - g.coeff(j)) : mpz_class(f.coeff(i) + g.coeff(j));
      if (s != 0) {
        e.insert(e.end(), f.exps(i), f.exps(i) + n);
        c.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  return MPoly::from_sorted(f.vars(), std::move(e), std::move(c));
}

}  // namespace

MPoly add(const MPoly& f, const MPoly& g) {
  if (f.is_zero() && g.vars()) return g;
  if (g.is_zero()) return f;
  require_same(f, g);
  return merge(f, g, false);
}

MPoly sub(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) return f;
  if (f.is_zero()) return neg(g);
  require_same(f, g);
  return merge(f, g, true);
}

MPoly neg(const MPoly& f) {
  std::vector<mpz_class> c(f.raw_coeffs());
  for (auto& x : c) x = -x;
  return MPoly::from_sorted(f.vars(), f.raw_exps(), std::move(c));
}

MPoly scale(const MPoly& f, const mpz_class& s) {
  if (s == 0) return MPoly(f.vars());
  std::vector<mpz_class> c(f.raw_coeffs());
  for (auto& x : c) x *= s;
  return MPoly::from_sorted(f.vars(), f.raw_exps(), std::move(c));
}

MPoly mul_monomial(const MPoly& f, const ExpVec& m) {
  const std::size_t n = f.nvars();
  if (m.size() != n) throw UsageError("exponent vector length mismatch");
  std::vector<Exp> e(f.raw_exps());
  for (std::size_t t = 0; t < f.nterms(); ++t)
    for (std::size_t i = 0; i < n; ++i) e[t * n + i] = checked_sum(std::int64_t{e[t * n + i]} + m[i]);
  // Multiplication by a monomial preserves the order.
  return MPoly::from_sorted(f.vars(), std::move(e), f.raw_coeffs());
}

MPoly mul(const MPoly& f, const MPoly& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return MPoly(f.vars());
  const std::size_t n = f.nvars();
  if (g.nterms() == 1) return scale(mul_monomial(f, g.exp_vec(0)), g.coeff(0));
  if (f.nterms() == 1) return scale(mul_monomial(g, f.exp_vec(0)), f.coeff(0));
  std::unordered_map<ExpVec, mpz_class, ExpHash> acc;
  acc.reserve(f.nterms() * g.nterms());
  ExpVec e(n);
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    const Exp* a = f.exps(i);
    for (std::size_t j = 0; j < g.nterms(); ++j) {
      const Exp* b = g.exps(j);
      for (std::size_t k = 0; k < n; ++k) e[k] = checked_sum(std::int64_t{a[k]} + b[k]);
      mpz_class& slot = acc[e];
      mpz_addmul(slot.get_mpz_t(), f.coeff(i).get_mpz_t(), g.coeff(j).get_mpz_t());
    }
  }
  std::vector<const std::pair<const ExpVec, mpz_class>*> items;
  items.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) items.push_back(&kv);
  const VarTable& vt = *f.vars();
  std::sort(items.begin(), items.end(),
            [&](auto* a, auto* b) { return term_order(vt, a->first.data(), b->first.data()) > 0; });
  std::vector<Exp> ex;
  std::vector<mpz_class> cs;
  ex.reserve(items.size() * n);
  cs.reserve(items.size());
  for (auto* it : items) {
    ex.insert(ex.end(), it->first.begin(), it->first.end());
    cs.push_back(it->second);
  }
  return MPoly::from_sorted(f.vars(), std::move(ex), std::move(cs));
}

MPoly pow(const MPoly& f, unsigned m) {
  MPoly result = MPoly::constant(f.vars(), 1);
  if (m == 0) return result;
  if (f.nterms() == 1) {
    ExpVec e = f.exp_vec(0);
    for (auto& x : e) x = checked_sum(std::int64_t{x} * m);
    mpz_class c;
    mpz_pow_ui(c.get_mpz_t(), f.coeff(0).get_mpz_t(), m);
    return MPoly::monomial(f.vars(), e, c);
  }
  // Repeated multiplication keeps the intermediate sizes small for sparse input.
  for (unsigned i = 0; i < m; ++i) result = mul(result, f);
  return result;
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  require_same(f, g);
  if (g.is_zero()) throw UsageError("division by zero polynomial");
  if (f.is_zero()) return MPoly(f.vars());
  const std::size_t n = f.nvars();
  if (g.nterms() == 1) {
    std::vector<Exp> e(f.raw_exps());
    std::vector<mpz_class> c(f.raw_coeffs());
    const Exp* ge = g.exps(0);
    for (std::size_t t = 0; t < f.nterms(); ++t) {
      for (std::size_t k = 0; k < n; ++k) {
        e[t * n + k] -= ge[k];
        if (e[t * n + k] < 0) return std::nullopt;
      }
      if (!mpz_divisible_p(c[t].get_mpz_t(), g.coeff(0).get_mpz_t())) return std::nullopt;
      mpz_divexact(c[t].get_mpz_t(), c[t].get_mpz_t(), g.coeff(0).get_mpz_t());
    }
    return MPoly::from_sorted(f.vars(), std::move(e), std::move(c));
  }
  // Quick degree rejection.
  DegreeProfile df = mdeg(f), dg = mdeg(g);
  for (std::size_t k = 0; k < n; ++k)
    if (dg.var_deg[k] > df.var_deg[k]) return std::nullopt;
  std::vector<std::pair<ExpVec, mpz_class>> q;
  MPoly r = f;
  const Exp* lg = g.exps(0);
  const mpz_class& lc = g.coeff(0);
  ExpVec e(n);
  while (!r.is_zero()) {
    const Exp* lr = r.exps(0);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = lr[k] - lg[k];
      if (e[k] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(r.coeff(0).get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.coeff(0).get_mpz_t(), lc.get_mpz_t());
    r = sub(r, scale(mul_monomial(g, e), c));
    q.emplace_back(e, std::move(c));
  }
  return MPoly::from_terms(f.vars(), std::move(q));
}

MPoly divide_or_throw(const MPoly& f, const MPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InternalError("expected exact polynomial division");
  return *q;
}

MPoly divide_scalar(const MPoly& f, const mpz_class& s) {
  std::vector<mpz_class> c(f.raw_coeffs());
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t())) throw InternalError("inexact scalar division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  }
  return MPoly::from_sorted(f.vars(), f.raw_exps(), std::move(c));
}

MPoly derivative(const MPoly& f, std::size_t var) {
  const std::size_t n = f.nvars();
  if (var >= n) throw UsageError("variable index out of range");
  std::vector<std::pair<ExpVec, mpz_class>> t;
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    Exp k = f.exps(i)[var];
    if (k == 0) continue;
    ExpVec e = f.exp_vec(i);
    e[var] -= 1;
    t.emplace_back(std::move(e), f.coeff(i) * k);
  }
  return MPoly::from_terms(f.vars(), std::move(t));
}

DegreeProfile mdeg(const MPoly& f) {
  DegreeProfile d;
  const std::size_t n = f.nvars();
  d.var_deg.assign(n, 0);
  d.block_deg.assign(f.vars() ? f.vars()->block_count() : 0, 0);
  d.total = f.is_zero() ? -1 : 0;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    const Exp* e = f.exps(t);
    int tot = 0;
    for (std::size_t k = 0; k < n; ++k) {
      d.var_deg[k] = std::max<int>(d.var_deg[k], e[k]);
      tot += e[k];
    }
    d.total = std::max(d.total, tot);
    for (std::size_t b = 0; b < d.block_deg.size(); ++b) {
      int s = 0;
      for (std::size_t v : f.vars()->block(b)) s += e[v];
      d.block_deg[b] = std::max(d.block_deg[b], s);
    }
  }
  return d;
}

bool is_multihomogeneous(const MPoly& f) {
  if (f.is_zero()) return true;
  const auto& vt = *f.vars();
  std::vector<int> first;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    std::vector<int> cur(vt.block_count(), 0);
    for (std::size_t b = 0; b < vt.block_count(); ++b)
      for (std::size_t v : vt.block(b)) cur[b] += f.exps(t)[v];
    if (t == 0)
      first = cur;
    else if (cur != first)
      return false;
  }
  return true;
}

bool is_homogeneous_in(const MPoly& f, const std::vector<std::size_t>& vars) {
  int d = -1;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    int s = 0;
    for (std::size_t v : vars) s += f.exps(t)[v];
    if (d < 0)
      d = s;
    else if (s != d)
      return false;
  }
  return true;
}

int degree_in(const MPoly& f, const std::vector<std::size_t>& vars) {
  int d = f.is_zero() ? -1 : 0;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    int s = 0;
    for (std::size_t v : vars) s += f.exps(t)[v];
    d = std::max(d, s);
  }
  return d;
}

int degree_in(const MPoly& f, std::size_t var) { return degree_in(f, std::vector<std::size_t>{var}); }

std::size_t bitsize(const mpz_class& c) { return c == 0 ? 0 : mpz_sizeinbase(c.get_mpz_t(), 2); }

std::size_t bitsize(const MPoly& f) {
  std::size_t b = 0;
  for (const auto& c : f.raw_coeffs()) b = std::max(b, bitsize(c));
  return b;
}

mpz_class eval(const MPoly& f, const std::vector<mpz_class>& point) {
  const std::size_t n = f.nvars();
  if (point.size() != n) throw UsageError("evaluation point has wrong length");
  DegreeProfile d = mdeg(f);
  std::vector<std::vector<mpz_class>> pw(n);
  for (std::size_t k = 0; k < n; ++k) {
    pw[k].resize(std::max(d.var_deg[k], 0) + 1);
    pw[k][0] = 1;
    for (int j = 1; j <= d.var_deg[k]; ++j) pw[k][j] = pw[k][j - 1] * point[k];
  }
  mpz_class acc = 0, term;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    term = f.coeff(t);
    const Exp* e = f.exps(t);
    for (std::size_t k = 0; k < n; ++k)
      if (e[k]) term *= pw[k][e[k]];
    acc += term;
  }
  return acc;
}

MPoly substitute(const MPoly& f, const std::vector<std::pair<std::size_t, mpz_class>>& values) {
  std::vector<std::pair<ExpVec, mpz_class>> out;
  out.reserve(f.nterms());
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    ExpVec e = f.exp_vec(t);
    mpz_class c = f.coeff(t);
    for (const auto& [v, x] : values) {
      if (e[v] == 0) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e[v]));
      c *= p;
      e[v] = 0;
    }
    if (c != 0) out.emplace_back(std::move(e), std::move(c));
  }
  return MPoly::from_terms(f.vars(), std::move(out));
}

MPoly compose(const MPoly& f, std::size_t var, const MPoly& h) {
  require_same(f, h);
  auto cs = coefficients_in(f, var);
  // Horner in h.
  MPoly acc(f.vars());
  for (std::size_t k = cs.size(); k-- > 0;) acc = add(mul(acc, h), cs[k]);
  return acc;
}

MPoly compose_all(const MPoly& f, const std::vector<MPoly>& h, const Vars& target) {
  const std::size_t n = f.nvars();
  if (h.size() != n) throw UsageError("compose_all: wrong substitution count");
  DegreeProfile d = mdeg(f);
  std::vector<std::vector<MPoly>> pw(n);
  for (std::size_t k = 0; k < n; ++k) {
    pw[k].push_back(MPoly::constant(target, 1));
    for (int j = 1; j <= d.var_deg[k]; ++j) pw[k].push_back(mul(pw[k].back(), h[k]));
  }
  MPoly acc(target);
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    MPoly term = MPoly::constant(target, f.coeff(t));
    for (std::size_t k = 0; k < n; ++k)
      if (f.exps(t)[k]) term = mul(term, pw[k][f.exps(t)[k]]);
    acc = add(acc, term);
  }
  return acc;
}

MPoly remap(const MPoly& f, const Vars& target, const std::vector<std::size_t>& map) {
  const std::size_t n = f.nvars();
  if (map.size() != n) throw UsageError("remap: map length mismatch");
  std::vector<std::pair<ExpVec, mpz_class>> out;
  out.reserve(f.nterms());
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    ExpVec e(target->size(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (f.exps(t)[k] == 0) continue;
      if (map[k] >= target->size()) throw UsageError("remap: variable '" + f.vars()->name(k) + "' has no image");
      e[map[k]] += f.exps(t)[k];
    }
    out.emplace_back(std::move(e), f.coeff(t));
  }
  return MPoly::from_terms(target, std::move(out));
}

MPoly remap_by_name(const MPoly& f, const Vars& target) {
  std::vector<std::size_t> map(f.nvars(), SIZE_MAX);
  for (std::size_t k = 0; k < f.nvars(); ++k) {
    auto idx = target->index(f.vars()->name(k));
    if (idx) map[k] = *idx;
  }
  return remap(f, target, map);
}

std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var) {
  int d = degree_in(f, var);
  std::vector<std::vector<std::pair<ExpVec, mpz_class>>> parts(std::max(d, 0) + 1);
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    ExpVec e = f.exp_vec(t);
    Exp k = e[var];
    e[var] = 0;
    parts[k].emplace_back(std::move(e), f.coeff(t));
  }
  std::vector<MPoly> out;
  if (d < 0) return out;
  for (auto& p : parts) out.push_back(MPoly::from_terms(f.vars(), std::move(p)));
  return out;
}

std::vector<std::pair<ExpVec, MPoly>> coefficients_in(const MPoly& f, const std::vector<std::size_t>& vars) {
  std::vector<std::pair<ExpVec, std::vector<std::pair<ExpVec, mpz_class>>>> groups;
  std::unordered_map<ExpVec, std::size_t, ExpHash> where;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    ExpVec e = f.exp_vec(t);
    ExpVec key(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      key[i] = e[vars[i]];
      e[vars[i]] = 0;
    }
    auto it = where.find(key);
    if (it == where.end()) {
      it = where.emplace(key, groups.size()).first;
      groups.emplace_back(key, std::vector<std::pair<ExpVec, mpz_class>>{});
    }
    groups[it->second].second.emplace_back(std::move(e), f.coeff(t));
  }
  std::vector<std::pair<ExpVec, MPoly>> out;
  out.reserve(groups.size());
  for (auto& [k, terms] : groups) out.emplace_back(k, MPoly::from_terms(f.vars(), std::move(terms)));
  return out;
}

mpz_class content(const MPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f.raw_coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MPoly primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  mpz_class g = content(f);
  if (f.leading_coeff() < 0) g = -g;
  return g == 1 ? f : divide_scalar(f, g);
}

MPoly normalize(const MPoly& f) { return primitive(f); }

}  // namespace ck
