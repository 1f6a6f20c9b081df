#pragma once

#include <vector>

#include "chowkit/dimension.hpp"

namespace ck::detail {

// V after substituting every linear form that lives in a single block by a
// parametrization of its kernel. Blocks cut down to a point are dropped.
struct Reduced {
  Vars table;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<MPoly> polys;
  bool empty = false;  // the linear part alone has no zero
};

Reduced reduce_linear(const MultiprojVariety& V);

}  // namespace ck::detail
