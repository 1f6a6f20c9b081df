#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/dimension.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/polydet.hpp"

namespace ck {

// Line-oriented problem description:
//   ring x0 x1 x2          variables, in order
//   blocks (x0 x1)(y0 y1)  optional partition of the ring
//   poly x0*x2 - x1^2      one polynomial per line, repeatable
//   dim 1                  dimension r
//   format 2 1             format alpha, one entry per block
//   dims 1:1 2:1 12:2      projection dimensions, subsets as block digits
//   row a, b               matrix row for `det`, repeatable
//   seed 7 / retries 5     defaults for the command-line flags
// `#` starts a comment.
struct ProblemFile {
  Vars vars;
  bool has_blocks = false;
  std::vector<MPoly> polys;
  std::optional<int> dim;
  std::optional<std::vector<int>> format;
  std::optional<DimTable> dims;
  std::vector<std::vector<MPoly>> rows;
  std::optional<std::uint64_t> seed;
  std::optional<int> retries;
};

// Throws ParseError with the line and column of the offending token.
ProblemFile parse_problem(const std::string& text);

// Single projective space on all ring variables; requires no `blocks` line
// or exactly one block.
ProjectiveVariety as_projective(const ProblemFile& p);
MultiprojVariety as_multiproj(const ProblemFile& p);
PolyMatrix as_matrix(const ProblemFile& p);

}  // namespace ck
