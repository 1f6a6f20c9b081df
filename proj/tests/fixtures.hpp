#pragma once

#include <string>
#include <vector>

#include "chowkit/problem.hpp"

namespace fixtures {

inline const char* kLine = "ring x0 x1 x2 x3\npoly x2\npoly x3\n";
inline const char* kPoint = "ring x0 x1 x2\npoly x1\npoly x2\n";
inline const char* kConic = "ring x0 x1 x2\npoly x0*x2 - x1^2\n";
inline const char* kCircle = "ring x0 x1 x2\npoly x0^2 + x1^2 - x2^2\n";
inline const char* kTwistedCubic =
    "ring x0 x1 x2 x3\n"
    "poly x0*x2 - x1^2\n"
    "poly x1*x3 - x2^2\n"
    "poly x0*x3 - x1*x2\n"
    "dim 1\n";
// Two plane conics, each in its own P^3.
inline const char* kConicPair =
    "ring x0 x1 x2 x3 y0 y1 y2 y3\n"
    "blocks (x0 x1 x2 x3)(y0 y1 y2 y3)\n"
    "poly x3\n"
    "poly x0*x2 - x1^2\n"
    "poly y3\n"
    "poly y0^2 + y1^2 - y2^2\n"
    "dims 1:1 2:1 12:2\n"
    "format 2 1\n";

inline ck::ProjectiveVariety projective(const std::string& text) { return ck::as_projective(ck::parse_problem(text)); }
inline ck::MultiprojVariety multiproj(const std::string& text) { return ck::as_multiproj(ck::parse_problem(text)); }

}  // namespace fixtures
