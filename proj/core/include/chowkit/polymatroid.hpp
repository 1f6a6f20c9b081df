#pragma once

#include <set>
#include <string>
#include <vector>

#include "chowkit/rng.hpp"

namespace ck {

// Set function on subsets of {0..l-1}; value[I] indexed by bitmask.
struct SubmodularFn {
  std::size_t l = 0;
  std::vector<long long> value;

  SubmodularFn() = default;
  explicit SubmodularFn(std::size_t l_) : l(l_), value(std::size_t{1} << l_, 0) {}
  long long operator()(unsigned I) const { return value.at(I); }
  long long& operator[](unsigned I) { return value.at(I); }
  unsigned full() const { return (1u << l) - 1; }
};

using Point = std::vector<int>;

// delta(empty) = 0, monotone, submodular; all checked exhaustively.
bool is_submodular(const SubmodularFn& f);

struct Polymatroid {
  SubmodularFn rank;
  std::vector<int> box;  // n_i; points are enumerated inside it
};

// Throws UsageError unless the table is submodular and sizes agree.
Polymatroid make_polymatroid(SubmodularFn rank, std::vector<int> box);

// delta*(I) = delta(L \ I) - delta(L) + sum_{i in I} n_i. Requires
// delta(I) <= sum_{i in I} n_i.
Polymatroid dual(const Polymatroid& P);
// delta'(I) = min(delta(I), delta(L) - 1). Requires delta(L) >= 1.
Polymatroid truncate(const Polymatroid& P);
// dual(truncate(dual(P))).
Polymatroid elongate(const Polymatroid& P);

bool member(const Point& a, const Polymatroid& P);
std::set<Point> points(const Polymatroid& P);
// Points with |a| = delta(L).
std::set<Point> bases(const Polymatroid& P);

// Random monotone submodular table with delta(I) <= sum_{i in I} box_i.
SubmodularFn random_submodular(std::size_t l, const std::vector<int>& box, Rng& rng);

// "(2,1) (1,2)": descending lexicographic order
std::string to_string(const std::set<Point>& pts);
std::string to_string(const Point& p);

}  // namespace ck
