#pragma once

#include <vector>

#include "chowkit/mpoly.hpp"
#include "chowkit/upoly.hpp"

namespace ck {

// Per-variable caps D_i. Packing substitutes y_1 -> z, y_2 -> z^(D_1+1), ...
struct KroneckerCaps {
  std::vector<int> caps;
  // Weight of each variable in the packed exponent; throws if the packed
  // degree would not fit in a signed 63-bit integer.
  std::vector<long long> weights() const;
  long long packed_bound() const;  // prod (D_i + 1)
};

// Packed polynomial as an MPoly in the single variable of `zvars`.
MPoly kronecker_pack(const MPoly& f, const KroneckerCaps& caps, const Vars& zvars);
UPoly kronecker_pack_dense(const MPoly& f, const KroneckerCaps& caps);
MPoly kronecker_unpack(const MPoly& g, const KroneckerCaps& caps, const Vars& vars);
MPoly kronecker_unpack_dense(const UPoly& g, const KroneckerCaps& caps, const Vars& vars);

}  // namespace ck
