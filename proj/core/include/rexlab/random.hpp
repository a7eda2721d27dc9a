#pragma once

#include <cstdint>
#include <random>

#include "rexlab/word.hpp"

namespace rexlab {

// All randomized operations take a caller-owned engine of this type.
using Rng = std::mt19937_64;

// Independent stream for (master seed, stream index), e.g. one per trial.
Rng derive_rng(std::uint64_t master_seed, std::uint64_t stream);

Word random_word(std::size_t length, Rng& rng);
// Uniform on [lo, hi].
std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi, Rng& rng);

} // namespace rexlab
