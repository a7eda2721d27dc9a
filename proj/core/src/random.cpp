#include "rexlab/random.hpp"

#include "rexlab/error.hpp"

namespace rexlab {

Rng derive_rng(std::uint64_t master_seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x7265786cU};
    return Rng(seq);
}

Word random_word(std::size_t length, Rng& rng) {
    std::vector<Bit> bits(length);
    std::uint64_t pool = 0;
    int left = 0;
    for (auto& b : bits) {
        if (left == 0) {
            pool = rng();
            left = 64;
        }
        b = static_cast<Bit>(pool & 1U);
        pool >>= 1;
        --left;
    }
    return Word(std::move(bits));
}

std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi, Rng& rng) {
    if (lo > hi) {
        throw DomainError("empty range");
    }
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

} // namespace rexlab
