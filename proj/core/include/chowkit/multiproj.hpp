#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "chowkit/chow.hpp"
#include "chowkit/dimension.hpp"
#include "chowkit/polymatroid.hpp"

namespace ck {

// alpha_i is the dimension of the i-th factor of a product of linear spaces.
using Format = Point;

// Formats beta <= n with |beta| = codim V and
// sum_{i in I} (n_i - beta_i) <= dim pi_I(V) for every nonempty I.
// The table must hold every nonempty subset; table[full] = dim V.
std::set<Format> support(const std::vector<int>& n, const DimTable& table);

// The polymatroid whose bases are the support: the dual of I -> dim pi_I(V).
Polymatroid support_polymatroid(const std::vector<int>& n, const DimTable& table);

// |alpha| = codim V - 1, alpha <= beta for some beta in the support.
std::set<Format> chow_hypersurface_formats(const std::vector<int>& n, const DimTable& table);
// The same set through dim pi_I(V) >= sum_{i in I}(n_i - alpha_i) - 1.
bool chow_format_by_table(const std::vector<int>& n, const DimTable& table, const Format& a);

using MdegFn = std::function<long long(const Format&)>;
// |alpha| = codim V; outside the support the table condition with slack one,
// inside the support mdeg(alpha) != 1.
std::set<Format> hurwitz_hypersurface_formats(const std::vector<int>& n, const DimTable& table, const MdegFn& mdeg);
// Outside-support predicate: sum_{i in I}(n_i - alpha_i) <= dim pi_I(V) + 1.
bool hurwitz_format_by_table(const std::vector<int>& n, const DimTable& table, const Format& a);
// Outside-support predicate: some Chow hypersurface format gamma <= alpha.
bool hurwitz_format_by_chow(const std::vector<int>& n, const DimTable& table, const Format& a);

// Number of points of V cut by n_i - alpha_i generic hyperplanes in each
// block. When `table` is null it is computed with dim_table.
long long multidegree(const MultiprojVariety& V, const Format& a, const RandomGrid& grid = {},
                      const DimTable* table = nullptr);

// Every polynomial multiplied by all monomials raising it to the componentwise
// maximal multidegree.
MultiprojVariety multi_degree_equalize(const MultiprojVariety& V);

struct MultiChowForm {
  MPoly poly;  // over blocks u<i><j><k>: block i, form j, coefficient k
  Format format;
  std::vector<int> degrees;  // per u-block
  std::size_t bitsize = 0;
  std::string provenance;
  std::uint64_t seed = 0;
};

// u-table for a format: n_i - alpha_i blocks of n_i + 1 variables per block i.
Vars multi_u_blocks(const std::vector<int>& n, const Format& a);

// V cut out by |n| - dim V polynomials. The format is checked against the
// table (computed when null).
MultiChowForm multi_chow_form_ci(const MultiprojVariety& V, const Format& a, const RandomGrid& grid = {},
                                 const DimTable* table = nullptr);

std::vector<LambdaMatrix> multi_generic_lc(const MultiprojVariety& V, int r, const RandomGrid& grid);

MultiChowForm multi_chow_form(const MultiprojVariety& V, int r, const Format& a, const RandomGrid& grid = {},
                              const DimTable* table = nullptr);

struct MultiBounds {
  mpz_class total_degree;          // B_r
  std::size_t variables = 0;       // A
  std::vector<mpz_class> bezout;   // per u-block, in multi_u_blocks order
};
MultiBounds multi_bounds(const MultiprojVariety& V, const Format& a);

}  // namespace ck
