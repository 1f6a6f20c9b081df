#pragma once

#include <vector>

#include <gmpxx.h>

namespace ck {

// Dense univariate integer polynomial, coefficient k multiplies z^k.
// Trailing zeros are trimmed by every operation.
using UPoly = std::vector<mpz_class>;

void trim(UPoly& p);
int udeg(const UPoly& p);  // -1 for zero
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const UPoly& a, const mpz_class& c);
UPoly uderiv(const UPoly& a);
mpz_class ueval(const UPoly& a, const mpz_class& z);
mpz_class ucontent(const UPoly& a);
UPoly uprimitive(const UPoly& a);  // positive leading coefficient
// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UPoly uprem(const UPoly& a, const UPoly& b);
// Exact division; returns false if b does not divide a over the integers.
bool udiv_exact(const UPoly& a, const UPoly& b, UPoly& q);
// Primitive gcd over Q scaled to a primitive integer polynomial.
UPoly ugcd(const UPoly& a, const UPoly& b);

// Interpolation through (x_i, y_i) with distinct integer nodes. The result is
// the unique polynomial of degree < n; it must have integer coefficients,
// which is checked (throws InternalError otherwise). Uses the Lagrange form
// over a common denominator followed by one exact division.
UPoly interpolate_lagrange(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y);

// Evaluation nodes 0, 1, -1, 2, -2, ...
std::vector<mpz_class> symmetric_nodes(std::size_t count);

}  // namespace ck
