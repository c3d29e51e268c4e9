#pragma once

// Seeded random elements for property checks.

#include <cstdint>
#include <random>

#include "mvdelta/carriers.hpp"

namespace mvdelta {

using Rng = std::mt19937_64;

/// k / 2^depth with k uniform in [0, 2^depth].
Q01 random_dyadic(Rng& rng, unsigned depth);

/// Up to max_interior interior breakpoints at dyadic abscissae, dyadic values.
PLFunc random_plfunc(Rng& rng, unsigned max_interior = 4, unsigned depth = 4);
PLFunc random_nonzero_plfunc(Rng& rng, unsigned max_interior = 4, unsigned depth = 4);

/// A random element of any supported carrier (Chang offsets within ±chang_range).
Value random_element(const Carrier& carrier, Rng& rng, unsigned depth = 4, std::int64_t chang_range = 50);

}  // namespace mvdelta
