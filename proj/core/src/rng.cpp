#include "isospec/rng.hpp"

#include <cmath>
#include <numbers>

namespace isospec::rng {
namespace {

std::uint64_t splitmix_round(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = splitmix_round(seed) ^ (counter * 0xd1b54a32d192ed03ULL);
    return splitmix_round(splitmix_round(z));
}

} // namespace

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(mix(seed, counter) >> 11) * 0x1.0p-53;
}

double gaussian(std::uint64_t seed, std::uint64_t counter) {
    // Box-Muller; u1 shifted away from 0 so the log stays finite.
    double u1 = 1.0 - uniform01(seed, 2 * counter);
    double u2 = uniform01(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec unit_sphere_vector(std::uint64_t seed, std::uint64_t index, int m) {
    Vec v(m);
    std::uint64_t base = index * static_cast<std::uint64_t>(m);
    std::uint64_t retry = 0;
    for (;;) {
        for (int c = 0; c < m; ++c) {
            v[c] = gaussian(seed, base + static_cast<std::uint64_t>(c) + retry);
        }
        double n = v.norm();
        if (n > 1e-8) {
            return v / n;
        }
        retry += 0x100000000ULL; // astronomically unlikely
    }
}

Mat gaussian_matrix(std::uint64_t seed, std::uint64_t index, int rows, int cols) {
    Mat a(rows, cols);
    std::uint64_t base = index * static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            a(i, k) = gaussian(seed, base + static_cast<std::uint64_t>(i * cols + k));
        }
    }
    return a;
}

} // namespace isospec::rng
