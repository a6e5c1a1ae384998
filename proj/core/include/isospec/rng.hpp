#pragma once

#include <cstdint>

#include "isospec/linalg.hpp"

namespace isospec::rng {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so sample streams can be split across blocks and replayed bit-exactly.

/// Uniform double in [0, 1) for the given (seed, counter) pair.
double uniform01(std::uint64_t seed, std::uint64_t counter);

/// Standard normal draw; consumes counters 2k and 2k+1 of its own substream.
double gaussian(std::uint64_t seed, std::uint64_t counter);

/// Point uniformly distributed on the unit sphere S^{m-1} (normalized Gaussian).
Vec unit_sphere_vector(std::uint64_t seed, std::uint64_t index, int m);

/// Matrix with independent standard normal entries.
Mat gaussian_matrix(std::uint64_t seed, std::uint64_t index, int rows, int cols);

} // namespace isospec::rng
