#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace dann {

using Rng = std::mt19937_64;

/// Independent generator for the stream addressed by (seed, path...). The
/// same address always yields the same stream, regardless of which thread
/// asks for it.
Rng derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1).
double uniform01(Rng& rng);

}  // namespace dann
