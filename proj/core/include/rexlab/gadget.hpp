#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rexlab/local_prg.hpp"
#include "rexlab/random.hpp"
#include "rexlab/rational.hpp"
#include "rexlab/regex.hpp"
#include "rexlab/word.hpp"

namespace rexlab {

enum class GadgetVariant : std::uint8_t { Starred, StarFree, Counting };

std::string_view variant_name(GadgetVariant v);
GadgetVariant parse_variant(std::string_view name);

struct GadgetConfig {
    std::size_t n = 16;   // seed length, a power of two
    std::size_t k = 3;    // locality
    std::size_t N = 64;   // example length
    Rational gamma{1, 5};
    GadgetVariant variant = GadgetVariant::Starred;
    Predicate predicate;
    std::uint64_t prng_seed = 0;

    // Throws DomainError unless n is a power of two with n >= 2,
    // 1 <= k <= n, predicate.k == k, N >= k*log2(n) and 0 < gamma < 1/2.
    void validate() const;
    // Non-fatal problems, currently only 1 - validity_probability > gamma/2.
    std::vector<std::string> warnings() const;
    // Whether sizes of this variant are measured with the counting rule.
    bool counting() const noexcept { return variant == GadgetVariant::Counting; }
    std::size_t block_bits() const;  // log2(n)
    std::size_t prefix_bits() const { return k * block_bits(); }
};

// Config with the default predicate for k.
GadgetConfig make_config(std::size_t n, std::size_t k, std::size_t N, Rational gamma, GadgetVariant variant,
                         std::uint64_t prng_seed);

// Hidden seed derived from cfg.prng_seed.
Seed gadget_seed(const GadgetConfig& cfg);

struct LabeledExample {
    Word z;
    Bit y = 0;

    bool operator==(const LabeledExample&) const = default;
};

// k blocks of n bits; block j is all ones except a 0 at position i_j.
Word encode_onehot(const Hyperedge& e, std::size_t n);
Hyperedge decode_onehot(const Word& z, std::size_t n, std::size_t k);

// Concatenated bin_index(i_j, n) blocks, k*log2(n) bits.
Word encode_compressed(const Hyperedge& e, std::size_t n);
// Reads the first k blocks of z. The result may repeat indices.
Hyperedge decode_compressed(const Word& z, std::size_t n, std::size_t k);

// True iff the first k blocks of z decode to pairwise distinct indices.
bool is_valid_extended(const Word& z, std::size_t n, std::size_t k);

// n(n-1)...(n-k+1) / n^k
Rational validity_probability(std::size_t n, std::size_t k);
// (1 - k/n)^k
Rational validity_lower_bound(std::size_t n, std::size_t k);

// Union of bin(i) over {i : x_i = b}, i ascending. ∅ if there is no such i.
Regex build_Ib(const Seed& x, Bit b, std::size_t n);
// I_{u_1}...I_{u_k}, followed by (0|1)* in the starred variant.
Regex build_Ru(const Seed& x, const Word& u, const GadgetConfig& cfg);
// Union of R_u over {u : P(u) = 1} in lexicographic order, then the
// (0|1)^(N - k log n) pad for the star-free and counting variants.
Regex build_Rx(const Seed& x, const Predicate& p, const GadgetConfig& cfg);
// Accepts the words whose blocks a < b carry the same index.
Regex build_Rdup(const GadgetConfig& cfg);
// R_x | R_dup
Regex build_target(const Seed& x, const GadgetConfig& cfg);

struct GadgetSize {
    std::uint64_t measured = 0;
    std::uint64_t closed_form = 0;
};

// Size of build_target(x, cfg) counted directly from the construction
// without building it.
std::uint64_t gadget_size_closed_form(const Seed& x, const GadgetConfig& cfg);
GadgetSize gadget_size(const Seed& x, const GadgetConfig& cfg);

enum class ChallengeMode : std::uint8_t { Random, Pseudorandom };

std::string_view mode_name(ChallengeMode m);
ChallengeMode parse_mode(std::string_view name);

struct Challenge {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Hyperedge> edges;
    Word y;
    ChallengeMode mode = ChallengeMode::Random;
    std::optional<Seed> hidden_seed;  // pseudorandom mode only

    void validate() const;
    bool operator==(const Challenge&) const = default;
};

// Edges are drawn first, so both modes share them under the same rng state.
Challenge make_challenge(const GadgetConfig& cfg, std::size_t m, ChallengeMode mode, Rng& rng);

// Draws uniform z of length N. Invalid draws are labelled 1 as they are;
// valid draws take the next challenge pair, overwrite their prefix with its
// encoding and carry its label. Throws DomainError if the challenge runs out.
std::vector<LabeledExample> simulate_oracle(const GadgetConfig& cfg, const Challenge& ch, std::size_t count,
                                            Rng& rng);

// gadget n=<> k=<> N=<> gamma=<> variant=<> pred=<table> seed=<>
std::string format_config(const GadgetConfig& cfg);
GadgetConfig parse_config(std::string_view line);

// challenge <n> <k> <m> <random|pseudorandom>
// [seed <n bits>]
// <i_1> ... <i_k> <y>     (m lines)
void write_challenge(std::ostream& out, const Challenge& ch);
Challenge parse_challenge(std::string_view text);

// examples <N> <count>
// <z> <y>                 (count lines)
void write_examples(std::ostream& out, std::span<const LabeledExample> examples);
std::vector<LabeledExample> parse_examples(std::string_view text);

} // namespace rexlab
