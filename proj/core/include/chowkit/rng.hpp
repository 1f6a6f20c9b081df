#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace ck {

// Seeded stream with platform-independent draws. std::uniform_int_distribution
// is implementation-defined, so bounded draws use rejection on raw output.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : eng_(mix(seed)) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  mpz_class uniform_mpz(std::int64_t lo, std::int64_t hi) { return mpz_class(static_cast<long>(uniform(lo, hi))); }

  // Independent child stream, e.g. one per query.
  Rng derive(std::uint64_t tag) { return Rng(next() ^ mix(tag + 0x9e3779b97f4a7c15ULL)); }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::mt19937_64 eng_;
};

// Grid S = {1..bound} (optionally symmetric) used for random combinations.
struct RandomGrid {
  std::uint64_t seed = 0;
  std::int64_t bound = 1 << 15;
  int retries = 3;
};

}  // namespace ck
