#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "orbit/word.hpp"

namespace orbit {

/// splitmix64 step; derives independent stream seeds from one master seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform random letters over `alphabet` (both signs), freely reduced;
/// the raw length is uniform in [0, max_length].
Word random_word(std::mt19937_64& rng, const std::vector<GeneratorSymbol>& alphabet,
                 std::size_t max_length);

/// Runs body(0..count-1) on a few worker threads. The first exception
/// (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace orbit
