#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "rexlab/random.hpp"
#include "rexlab/word.hpp"

namespace rexlab {

// Ordered tuple of pairwise distinct 1-based vertex indices.
using Hyperedge = std::vector<std::size_t>;
using Seed = Word;

struct Hypergraph {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Hyperedge> edges;

    std::size_t m() const noexcept { return edges.size(); }
    void validate() const;
};

// Truth table of P: {0,1}^k -> {0,1}; entry j holds P(u) for the u whose
// big-endian value is j.
struct Predicate {
    std::size_t k = 0;
    std::vector<Bit> table;

    void validate() const;
    bool operator==(const Predicate&) const = default;
};

void validate_edge(const Hyperedge& e, std::size_t n);

// m i.i.d. edges, each uniform over the n(n-1)...(n-k+1) ordered tuples.
Hypergraph sample_hypergraph(std::size_t n, std::size_t m, std::size_t k, Rng& rng);

// (x_{i_1}, ..., x_{i_k}).
Word restrict_seed(const Seed& x, const Hyperedge& e);

Bit eval_predicate(const Predicate& p, const Word& u);

// Bit i is P(x restricted to E_i).
Word prg_output(const Predicate& p, const Hypergraph& g, const Seed& x);

// u1 XOR (u2 AND u3) for k >= 3, u1 XOR u2 for k = 2, u1 for k = 1.
// A fixed stand-in with no security claim.
Predicate default_predicate(std::size_t k);

// Hypergraph text: "hg <n> <m> <k>" then one edge per line as k 1-based
// indices. Predicate text: "pred <k> <2^k-bit table>".
void write_hypergraph(std::ostream& out, const Hypergraph& g);
Hypergraph parse_hypergraph(std::string_view text);
void write_predicate(std::ostream& out, const Predicate& p);
Predicate parse_predicate(std::string_view text);

} // namespace rexlab
