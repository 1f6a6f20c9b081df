#include "chowkit/polydet.hpp"

#include <algorithm>
#include <sstream>

#include "chowkit/errors.hpp"
#include "chowkit/poly_text.hpp"

namespace ck {

PolyMatrix::PolyMatrix(Vars vars, std::size_t dim) : vars_(std::move(vars)), dim_(dim), e_(dim * dim, MPoly(vars_)) {}

PolyMatrix::PolyMatrix(Vars vars, std::size_t dim, std::vector<MPoly> entries)
    : vars_(std::move(vars)), dim_(dim), e_(std::move(entries)) {
  if (e_.size() != dim * dim) throw UsageError("matrix must be square");
  for (auto& p : e_) {
    if (p.is_zero() && !p.vars()) p = MPoly(vars_);
    if (!same_vars(p.vars(), vars_)) throw UsageError("matrix entries must share one variable table");
  }
}

void PolyMatrix::set(std::size_t i, std::size_t j, MPoly p) {
  if (!same_vars(p.vars(), vars_)) throw UsageError("matrix entries must share one variable table");
  e_.at(i * dim_ + j) = std::move(p);
}

IntMat PolyMatrix::evaluate(const std::vector<mpz_class>& point) const {
  IntMat out(dim_, dim_);
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!e_[k].is_zero()) out.a[k] = eval(e_[k], point);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& idx) const {
  PolyMatrix s(vars_, idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s.e_[i * idx.size() + j] = (*this)(idx[i], idx[j]);
  return s;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? ", " : "") << ck::to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

namespace {

MPoly cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.dim();
  if (row == n) return MPoly::constant(m.vars(), 1);
  MPoly acc(m.vars());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(k));
      MPoly minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      MPoly t = mul(m(row, c), minor);
      acc = sign > 0 ? add(acc, t) : sub(acc, t);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

MPoly det_cofactor(const PolyMatrix& m) {
  if (m.dim() > 6) throw UsageError("cofactor determinant limited to dimension 6");
  std::vector<std::size_t> cols(m.dim());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m, cols, 0);
}

KroneckerCaps default_det_caps(const PolyMatrix& m) {
  KroneckerCaps caps;
  caps.caps.assign(m.vars()->size(), 0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      auto d = mdeg(m(i, j));
      for (std::size_t k = 0; k < caps.caps.size(); ++k) caps.caps[k] = std::max(caps.caps[k], d.var_deg[k]);
    }
  for (auto& c : caps.caps) c *= static_cast<int>(m.dim());
  return caps;
}

namespace {

// Interpolates det of a matrix of dense univariate entries.
UPoly det_dense_univariate(const std::vector<UPoly>& entries, std::size_t n, long long deg_bound,
                           bool& verified) {
  auto nodes = symmetric_nodes(static_cast<std::size_t>(deg_bound) + 2);
  std::vector<mpz_class> xs, ys;
  IntMat M(n, n);
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    for (std::size_t k = 0; k < entries.size(); ++k) M.a[k] = ueval(entries[k], nodes[p]);
    xs.push_back(nodes[p]);
    ys.push_back(det_bareiss(M));
  }
  // Last node is held out for verification.
  mpz_class vx = xs.back(), vy = ys.back();
  xs.pop_back();
  ys.pop_back();
  UPoly d = interpolate_lagrange(xs, ys);
  verified = ueval(d, vx) == vy;
  return d;
}

}  // namespace

MPoly det_kronecker(const PolyMatrix& m, const KroneckerCaps& caps) {
  const std::size_t n = m.dim();
  if (caps.caps.size() != m.vars()->size()) throw UsageError("one Kronecker cap per variable required");
  if (n == 0) return MPoly::constant(m.vars(), 1);
  // Entries are packed with the output caps so that the packed determinant
  // unpacks without carries.
  std::vector<UPoly> packed(n * n);
  long long bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long long rowmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      packed[i * n + j] = kronecker_pack_dense(m(i, j), caps);
      rowmax = std::max<long long>(rowmax, udeg(packed[i * n + j]));
    }
    bound += rowmax;
  }
  bound = std::min(bound, caps.packed_bound() - 1);
  bool ok = false;
  UPoly d = det_dense_univariate(packed, n, bound, ok);
  if (!ok) throw PreconditionError("packed determinant degree exceeds the caps");
  MPoly out = kronecker_unpack_dense(d, caps, m.vars());
  // Caps below the true partial degrees wrap digits; a random check exposes it.
  std::vector<mpz_class> pt(m.vars()->size());
  for (std::size_t k = 0; k < pt.size(); ++k) pt[k] = static_cast<long>(3 + 2 * k) * ((k % 2) ? -1 : 1);
  if (eval(out, pt) != det_bareiss(m.evaluate(pt)))
    throw PreconditionError("Kronecker caps below the determinant's partial degrees");
  return out;
}

MPoly det_univariate_interp(const PolyMatrix& m, int D) {
  if (m.vars()->size() != 1) throw UsageError("univariate determinant expects one variable");
  if (D < 0) throw UsageError("negative degree cap");
  const std::size_t n = m.dim();
  std::vector<UPoly> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly& e = m(i, j);
      UPoly u;
      for (std::size_t t = 0; t < e.nterms(); ++t) {
        std::size_t k = static_cast<std::size_t>(e.exps(t)[0]);
        if (u.size() <= k) u.resize(k + 1);
        u[k] = e.coeff(t);
      }
      entries[i * n + j] = u;
    }
  bool ok = false;
  UPoly d = det_dense_univariate(entries, n, D, ok);
  if (!ok) throw PreconditionError("determinant degree exceeds the supplied cap");
  std::vector<std::pair<ExpVec, mpz_class>> terms;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) terms.emplace_back(ExpVec{static_cast<Exp>(k)}, d[k]);
  return MPoly::from_terms(m.vars(), std::move(terms));
}

}  // namespace ck
