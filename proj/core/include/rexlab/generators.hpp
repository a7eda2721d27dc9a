#pragma once

#include <cstddef>
#include <cstdint>

#include "rexlab/random.hpp"
#include "rexlab/reductions.hpp"
#include "rexlab/regex.hpp"

namespace rexlab {

// Random expressions for property tests and benchmarks.
struct RegexGenOptions {
    std::uint64_t max_size = 12;  // measured with counting
    OperatorProfile profile = OperatorProfile::extended();
    std::uint64_t max_reps = 3;   // Count exponents are drawn from [0, max_reps]
};

// Result satisfies conforms(r, opts.profile) and size_of(r, true) <= max_size.
Regex random_regex(const RegexGenOptions& opts, Rng& rng);

// Every variable joins each term independently with probability 1/2 and a
// random sign.
Dnf random_dnf(std::size_t n, std::size_t m, Rng& rng);

// Node count in [1, max_size]; variables drawn from 1..n.
BooleanFormula random_formula(std::size_t n, std::size_t max_size, Rng& rng);

} // namespace rexlab
