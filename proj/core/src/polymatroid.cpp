#include "chowkit/polymatroid.hpp"

#include <algorithm>

#include "chowkit/errors.hpp"

namespace ck {

namespace {

long long box_sum(const std::vector<int>& box, unsigned I) {
  long long s = 0;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (I >> i & 1u) s += box[i];
  return s;
}

void check_box(const Polymatroid& P) {
  for (unsigned I = 0; I <= P.rank.full(); ++I)
    if (P.rank(I) > box_sum(P.box, I)) throw UsageError("rank exceeds the box on subset " + std::to_string(I));
}

}  // namespace

bool is_submodular(const SubmodularFn& f) {
  if (f.value.size() != (std::size_t{1} << f.l)) return false;
  if (f(0) != 0) return false;
  for (unsigned I = 0; I <= f.full(); ++I)
    for (unsigned J = 0; J <= f.full(); ++J) {
      if ((I & J) == I && f(I) > f(J)) return false;
      if (f(I) + f(J) < f(I | J) + f(I & J)) return false;
    }
  return true;
}

Polymatroid make_polymatroid(SubmodularFn rank, std::vector<int> box) {
  if (box.size() != rank.l) throw UsageError("box size does not match the ground set");
  if (!is_submodular(rank)) throw UsageError("table is not a monotone submodular function with value 0 at the empty set");
  for (int b : box)
    if (b < 0) throw UsageError("negative box entry");
  return {std::move(rank), std::move(box)};
}

Polymatroid dual(const Polymatroid& P) {
  check_box(P);
  const unsigned L = P.rank.full();
  SubmodularFn d(P.rank.l);
  for (unsigned I = 0; I <= L; ++I) d[I] = P.rank(L & ~I) - P.rank(L) + box_sum(P.box, I);
  return {d, P.box};
}

Polymatroid truncate(const Polymatroid& P) {
  const long long top = P.rank(P.rank.full());
  if (top < 1) throw UsageError("cannot truncate a polymatroid of rank 0");
  SubmodularFn d = P.rank;
  for (auto& v : d.value) v = std::min(v, top - 1);
  return {d, P.box};
}

Polymatroid elongate(const Polymatroid& P) { return dual(truncate(dual(P))); }

bool member(const Point& a, const Polymatroid& P) {
  if (a.size() != P.rank.l) return false;
  for (int v : a)
    if (v < 0) return false;
  for (unsigned I = 1; I <= P.rank.full(); ++I) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (I >> i & 1u) s += a[i];
    if (s > P.rank(I)) return false;
  }
  return true;
}

std::set<Point> points(const Polymatroid& P) {
  std::set<Point> out;
  const std::size_t l = P.rank.l;
  Point a(l, 0);
  while (true) {
    if (member(a, P)) out.insert(a);
    std::size_t k = 0;
    while (k < l && a[k] == P.box[k]) a[k++] = 0;
    if (k == l) break;
    ++a[k];
  }
  return out;
}

std::set<Point> bases(const Polymatroid& P) {
  std::set<Point> out;
  const long long top = P.rank(P.rank.full());
  for (const auto& a : points(P)) {
    long long s = 0;
    for (int v : a) s += v;
    if (s == top) out.insert(a);
  }
  return out;
}

SubmodularFn random_submodular(std::size_t l, const std::vector<int>& box, Rng& rng) {
  // Sum of capped modular functions, then convolved with the box so that
  // delta(I) <= sum_I n_i while staying submodular.
  SubmodularFn raw(l);
  const int pieces = static_cast<int>(rng.uniform(1, 3));
  for (int p = 0; p < pieces; ++p) {
    std::vector<long long> w(l);
    for (auto& x : w) x = rng.uniform(0, 3);
    const long long cap = rng.uniform(1, 6);
    for (unsigned I = 0; I <= raw.full(); ++I) {
      long long s = 0;
      for (std::size_t i = 0; i < l; ++i)
        if (I >> i & 1u) s += w[i];
      raw[I] += std::min(s, cap);
    }
  }
  SubmodularFn out(l);
  for (unsigned I = 0; I <= out.full(); ++I) {
    long long best = box_sum(box, I);
    for (unsigned J = I;; J = (J - 1) & I) {
      best = std::min(best, raw(J) + box_sum(box, I & ~J));
      if (J == 0) break;
    }
    out[I] = best;
  }
  return out;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const std::set<Point>& pts) {
  std::string s;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) s += (s.empty() ? "" : " ") + to_string(*it);
  return s;
}

}  // namespace ck
