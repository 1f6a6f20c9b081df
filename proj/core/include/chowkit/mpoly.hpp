#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ck {

using Exp = std::int32_t;
using ExpVec = std::vector<Exp>;

// Largest exponent accepted anywhere; sums are checked against it.
inline constexpr std::int64_t kMaxExp = (std::int64_t{1} << 31) - 1;

class VarTable {
public:
  // Empty `blocks` means a single block holding every variable.
  explicit VarTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> blocks = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t var) const { return block_of_.at(var); }

  bool operator==(const VarTable& o) const { return names_ == o.names_ && blocks_ == o.blocks_; }

private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

using Vars = std::shared_ptr<const VarTable>;

Vars make_vars(std::vector<std::string> names, std::vector<std::vector<std::size_t>> blocks = {});
bool same_vars(const Vars& a, const Vars& b);

struct DegreeProfile {
  std::vector<int> var_deg;    // partial degree per variable
  std::vector<int> block_deg;  // max block-summed exponent per block
  int total = 0;               // max total degree over terms (-1 for zero)
};

// Sparse polynomial with arbitrary-precision integer coefficients.
// Terms are kept in canonical order, leading term first: total degree, then
// per-block degrees in block order, then exponents by variable index.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(Vars vars) : vars_(std::move(vars)) {}

  static MPoly constant(Vars vars, const mpz_class& c);
  static MPoly variable(Vars vars, std::size_t i);
  static MPoly monomial(Vars vars, const ExpVec& e, const mpz_class& c);
  // Merges duplicate exponents and drops zeros; any input order.
  static MPoly from_terms(Vars vars, std::vector<std::pair<ExpVec, mpz_class>> terms);

  const Vars& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
  std::size_t nterms() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const;
  const Exp* exps(std::size_t t) const { return exps_.data() + t * nvars(); }
  ExpVec exp_vec(std::size_t t) const { return ExpVec(exps(t), exps(t) + nvars()); }
  const mpz_class& coeff(std::size_t t) const { return coeffs_[t]; }
  const mpz_class& leading_coeff() const;
  // Coefficient of an exact exponent vector (zero if absent).
  mpz_class coeff_of(const ExpVec& e) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Raw construction from already-canonical data; used by the arithmetic kernels.
  static MPoly from_sorted(Vars vars, std::vector<Exp> exps, std::vector<mpz_class> coeffs);
  const std::vector<Exp>& raw_exps() const noexcept { return exps_; }
  const std::vector<mpz_class>& raw_coeffs() const noexcept { return coeffs_; }

private:
  Vars vars_;
  std::vector<Exp> exps_;
  std::vector<mpz_class> coeffs_;
};

// Three-way canonical comparison of exponent vectors; >0 when a comes first.
int term_order(const VarTable& vars, const Exp* a, const Exp* b);

MPoly add(const MPoly& f, const MPoly& g);
MPoly sub(const MPoly& f, const MPoly& g);
MPoly neg(const MPoly& f);
MPoly mul(const MPoly& f, const MPoly& g);
MPoly scale(const MPoly& f, const mpz_class& c);
MPoly pow(const MPoly& f, unsigned m);
MPoly mul_monomial(const MPoly& f, const ExpVec& e);

inline MPoly operator+(const MPoly& f, const MPoly& g) { return add(f, g); }
inline MPoly operator-(const MPoly& f, const MPoly& g) { return sub(f, g); }
inline MPoly operator-(const MPoly& f) { return neg(f); }
inline MPoly operator*(const MPoly& f, const MPoly& g) { return mul(f, g); }

// Exact quotient f/g, or nullopt if g does not divide f over the integers.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);
// Throws InternalError when the division is not exact.
MPoly divide_or_throw(const MPoly& f, const MPoly& g);
MPoly divide_scalar(const MPoly& f, const mpz_class& c);

MPoly derivative(const MPoly& f, std::size_t var);
DegreeProfile mdeg(const MPoly& f);
bool is_multihomogeneous(const MPoly& f);
bool is_homogeneous_in(const MPoly& f, const std::vector<std::size_t>& vars);
int degree_in(const MPoly& f, const std::vector<std::size_t>& vars);
int degree_in(const MPoly& f, std::size_t var);
std::size_t bitsize(const MPoly& f);
std::size_t bitsize(const mpz_class& c);

// Full evaluation at an integer point (one value per variable).
mpz_class eval(const MPoly& f, const std::vector<mpz_class>& point);
// Replace the listed variables by integers; other variables stay symbolic.
MPoly substitute(const MPoly& f, const std::vector<std::pair<std::size_t, mpz_class>>& values);
// Replace variable `var` by polynomial `h` (same table).
MPoly compose(const MPoly& f, std::size_t var, const MPoly& h);
// Replace every variable i by h[i] (all over the same target table).
MPoly compose_all(const MPoly& f, const std::vector<MPoly>& h, const Vars& target);
// Move f into another table; var i of f becomes var map[i] of target.
MPoly remap(const MPoly& f, const Vars& target, const std::vector<std::size_t>& map);
// Move f into another table by matching variable names.
MPoly remap_by_name(const MPoly& f, const Vars& target);

// View f as a polynomial in `var`: coefficient of var^k for k = 0..deg.
std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var);
// Coefficients with respect to the monomials in a set of variables; keys are
// exponent vectors restricted to `vars`.
std::vector<std::pair<ExpVec, MPoly>> coefficients_in(const MPoly& f, const std::vector<std::size_t>& vars);

// Integer content and normal forms.
mpz_class content(const MPoly& f);
MPoly primitive(const MPoly& f);
// Primitive with positive leading coefficient.
MPoly normalize(const MPoly& f);

}  // namespace ck
