#pragma once

#include <cstdint>
#include <random>

#include "ncpainleve/series.hpp"

namespace ncp {

// Deterministic seed material for the randomized suites.  mt19937_64 is
// fully specified, and the range reduction below avoids the
// implementation-defined std distributions, so a given (seed, call
// sequence) yields identical values on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi);  // inclusive

    // Coefficient entry: integer in [-9, 9] over integer in [1, 4].
    Rational rational_entry();

    CoefMatrix matrix(int dim);
    CoefMatrix invertible_matrix(int dim);  // resampled until invertible

    // Random series with every coefficient dense; the constant
    // coefficient is resampled until invertible when asked for.
    RingElem elem(int dim, const Rational& x0, int order, bool invertible_c0 = true);

  private:
    std::mt19937_64 eng_;
};

// Stable per-suite stream: mixes the run seed with the suite name so
// suite order and selection never shift each other's draws.
std::uint64_t substream(std::uint64_t seed, std::string_view label);

}  // namespace ncp
