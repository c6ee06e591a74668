#pragma once

// Shared helpers for the Catch2 suite: fixed-seed replica sampling and a
// couple of reference CDFs. Every test draws from its own seed constant so
// results never depend on test ordering or filtering.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <masspart/randkit.hpp>

namespace testsup {

// One value per replica, stream index = replica under the given seed.
template <class Fn>
std::vector<double> draw(std::size_t n, std::uint64_t seed, Fn&& fn) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        masspart::RngStream g = masspart::make_stream(seed, i);
        out[i] = fn(g);
    }
    return out;
}

inline double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double exp1_cdf(double x) { return -std::expm1(-x); }

} // namespace testsup
