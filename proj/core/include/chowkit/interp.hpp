#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/mpoly.hpp"
#include "chowkit/upoly.hpp"

namespace ck {

// Black box for a quantity R(s; p) polynomial in parameters p and an
// auxiliary perturbation variable s.
class SeriesOracle {
public:
  virtual ~SeriesOracle() = default;
  // Coefficients of R(s; pt) in s, low to high; nullopt when the point is
  // degenerate for the underlying construction.
  virtual std::optional<UPoly> series(const std::vector<mpz_class>& pt) = 0;
  // R(0; pt) when it is cheaply available, nullopt otherwise.
  virtual std::optional<mpz_class> value(const std::vector<mpz_class>&) { return std::nullopt; }
};

// Degree information for a group of parameter variables.
struct ParamBlock {
  std::vector<std::size_t> vars;
  int degree = 0;      // bound on the total degree in `vars`
  bool exact = false;  // homogeneous of exactly `degree` in `vars`
};

enum class InterpStrategy { automatic, lower_set, kronecker };

struct InterpOptions {
  InterpStrategy strategy = InterpStrategy::automatic;
  std::uint64_t seed = 0;
  int retries = 4;
  // Largest packed degree for which Kronecker packing is used automatically.
  long long kronecker_limit = 400;
  // Largest number of interpolation points accepted.
  std::size_t max_points = 400000;
};

struct InterpReport {
  int order = 0;           // s-order of the recovered coefficient
  std::size_t points = 0;  // oracle evaluations
  bool kronecker = false;
};

// Recovers the lowest nonvanishing s-coefficient of R as a polynomial over
// `params`; `blocks` must partition the parameter variables.
MPoly interpolate_lowest(const Vars& params, const std::vector<ParamBlock>& blocks, SeriesOracle& oracle,
                         const InterpOptions& opt, InterpReport* report = nullptr);

// Thrown when the recovered polynomial disagrees with the oracle at a fresh
// point, i.e. the degree information was wrong.
struct InterpolationMismatch : Error {
  explicit InterpolationMismatch(const std::string& w) : Error(ErrorKind::internal, w) {}
};

}  // namespace ck
