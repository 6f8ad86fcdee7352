#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qsmote {

// All randomness in the toolkit flows through an explicitly seeded
// mt19937_64. Draws go through the helpers below instead of the standard
// <random> distributions, whose output is implementation-defined; this keeps
// seeded runs bit-reproducible across standard libraries.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to spread structured seed tuples over the
// full 64-bit space before feeding them to mt19937_64.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic substream seed from (master, a, b). Parallel workers seeded
// with distinct (a, b) pairs produce the same draws as a serial run.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

Rng make_rng(std::uint64_t seed);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

// Uniform integer in [0, n). Rejection-sampled, unbiased.
std::size_t uniform_below(Rng& rng, std::size_t n);

// Standard normal via Box-Muller on uniform01 draws (two uniforms per call).
double normal01(Rng& rng);

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace qsmote
