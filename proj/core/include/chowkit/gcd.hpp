#pragma once

#include <vector>

#include "chowkit/mpoly.hpp"

namespace ck {

// Greatest common divisor, primitive with positive leading coefficient.
// Recursive primitive subresultant PRS, one variable at a time.
MPoly gcd(const MPoly& f, const MPoly& g);
MPoly gcd(const std::vector<MPoly>& fs);

// f / gcd(f, df/dx_1, ..., df/dx_n), normalized. Throws on zero input.
MPoly square_free_part(const MPoly& f);

// gcd of the coefficients of f viewed as a polynomial in `var`.
MPoly content_in(const MPoly& f, std::size_t var);

}  // namespace ck
