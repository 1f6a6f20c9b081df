#pragma once

#include <string>

#include "chowkit/mpoly.hpp"

namespace ck {

// Canonical rendering: terms in canonical order, `*` products, `^` powers,
// e.g. "u00*u11 - u01*u10".
std::string to_string(const MPoly& f);

// Parses an expression over `vars` using + - * ^, parentheses and integer
// literals. Throws ParseError; `line` and `col0` locate the expression start.
MPoly parse_poly(const std::string& text, const Vars& vars, int line = 1, int col0 = 1);

}  // namespace ck
