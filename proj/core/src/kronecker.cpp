#include "chowkit/kronecker.hpp"

#include "chowkit/errors.hpp"

namespace ck {

std::vector<long long> KroneckerCaps::weights() const {
  std::vector<long long> w(caps.size());
  long long acc = 1;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (caps[i] < 0) throw UsageError("negative Kronecker cap");
    w[i] = acc;
    if (__builtin_mul_overflow(acc, static_cast<long long>(caps[i]) + 1, &acc))
      throw UsageError("Kronecker packed degree overflows");
  }
  return w;
}

long long KroneckerCaps::packed_bound() const {
  long long acc = 1;
  for (int c : caps)
    if (__builtin_mul_overflow(acc, static_cast<long long>(c) + 1, &acc))
      throw UsageError("Kronecker packed degree overflows");
  return acc;
}

namespace {

long long packed_exponent(const MPoly& f, std::size_t t, const KroneckerCaps& caps, const std::vector<long long>& w) {
  long long e = 0;
  for (std::size_t k = 0; k < f.nvars(); ++k) {
    Exp x = f.exps(t)[k];
    if (x > caps.caps[k])
      throw PreconditionError("Kronecker cap violated for variable '" + f.vars()->name(k) + "'");
    e += w[k] * x;
  }
  return e;
}

ExpVec unpack_exponent(long long e, const KroneckerCaps& caps) {
  ExpVec out(caps.caps.size());
  for (std::size_t k = 0; k < caps.caps.size(); ++k) {
    const long long radix = static_cast<long long>(caps.caps[k]) + 1;
    out[k] = static_cast<Exp>(e % radix);
    e /= radix;
  }
  if (e != 0) throw PreconditionError("packed exponent outside the mixed-radix range");
  return out;
}

}  // namespace

MPoly kronecker_pack(const MPoly& f, const KroneckerCaps& caps, const Vars& zvars) {
  if (caps.caps.size() != f.nvars()) throw UsageError("one Kronecker cap per variable required");
  if (zvars->size() != 1) throw UsageError("packed table must have one variable");
  auto w = caps.weights();
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    long long e = packed_exponent(f, t, caps, w);
    if (e > kMaxExp) throw UsageError("packed exponent exceeds 2^31");
    terms.emplace_back(ExpVec{static_cast<Exp>(e)}, f.coeff(t));
  }
  return MPoly::from_terms(zvars, std::move(terms));
}

UPoly kronecker_pack_dense(const MPoly& f, const KroneckerCaps& caps) {
  if (caps.caps.size() != f.nvars()) throw UsageError("one Kronecker cap per variable required");
  auto w = caps.weights();
  UPoly out;
  for (std::size_t t = 0; t < f.nterms(); ++t) {
    long long e = packed_exponent(f, t, caps, w);
    if (static_cast<long long>(out.size()) <= e) out.resize(e + 1);
    out[e] += f.coeff(t);
  }
  trim(out);
  return out;
}

MPoly kronecker_unpack(const MPoly& g, const KroneckerCaps& caps, const Vars& vars) {
  if (g.nvars() != 1) throw UsageError("unpack expects a univariate polynomial");
  if (caps.caps.size() != vars->size()) throw UsageError("one Kronecker cap per variable required");
  caps.weights();
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  for (std::size_t t = 0; t < g.nterms(); ++t) terms.emplace_back(unpack_exponent(g.exps(t)[0], caps), g.coeff(t));
  return MPoly::from_terms(vars, std::move(terms));
}

MPoly kronecker_unpack_dense(const UPoly& g, const KroneckerCaps& caps, const Vars& vars) {
  if (caps.caps.size() != vars->size()) throw UsageError("one Kronecker cap per variable required");
  caps.weights();
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (g[e] != 0) terms.emplace_back(unpack_exponent(static_cast<long long>(e), caps), g[e]);
  return MPoly::from_terms(vars, std::move(terms));
}

}  // namespace ck
