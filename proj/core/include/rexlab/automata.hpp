#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <variant>
#include <vector>

#include "rexlab/regex.hpp"
#include "rexlab/word.hpp"

namespace rexlab {

using State = std::uint32_t;

// Nondeterministic automaton without ε-moves. Missing transitions are empty
// sets; initials and finals are kept sorted and duplicate-free.
struct Nfa {
    std::size_t state_count = 0;
    std::vector<State> initials;
    std::vector<std::array<std::vector<State>, 2>> transitions;
    std::vector<State> finals;

    explicit Nfa(std::size_t states = 0) : state_count(states), transitions(states) {}

    void add_transition(State from, Bit b, State to);
    bool is_final(State s) const;
    bool accepts(const Word& w) const;
    // Throws DomainError on out-of-range states or unsorted sets.
    void validate() const;
    // Sorts and deduplicates every state set.
    void normalize();
};

// Complete deterministic automaton.
struct Dfa {
    std::size_t state_count = 0;
    State initial = 0;
    std::vector<std::array<State, 2>> transitions;
    std::vector<bool> finals;

    explicit Dfa(std::size_t states = 0)
        : state_count(states), transitions(states, {0, 0}), finals(states, false) {}

    State step(State s, Bit b) const { return transitions[s][b]; }
    bool accepts(const Word& w) const;
    void validate() const;
};

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;

// Compositional ε-free Thompson construction; Count nodes are unfolded.
// Rejects Inter and Compl nodes. Only states that are both reachable and
// co-reachable are kept, so at most 2 * size_of(r, false) states remain.
Nfa thompson(const Regex& r);

// Reachable-subset construction. The result is complete (it includes the
// empty subset as a dead state when reachable).
Dfa determinize(const Nfa& a, std::size_t cap = kDefaultSubsetCap);

Dfa complement_dfa(const Dfa& d);

enum class ProductOp { And, Or };
// Reachable pairs only.
Dfa product(const Dfa& a, const Dfa& b, ProductOp op);

Dfa minimize(const Dfa& d);

// Recursive compilation of the full extended syntax. Plain subtrees go
// through thompson + determinize, Inter/Union of extended operands through
// product, Compl through complement, and Concat/Star/Count through NFA
// composition of the compiled operands.
Dfa compile_extended(const Regex& r, std::size_t cap = kDefaultSubsetCap);

// State elimination. Non-initial non-final states are eliminated first,
// then the rest, each group in increasing index order.
Regex dfa_to_re(const Dfa& d);

Nfa to_nfa(const Dfa& d);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);
// Keeps states reachable from an initial state and co-reachable to a final
// state, renumbered in increasing order.
Nfa trim(const Nfa& a);

// n+1 states accepting words whose n-th symbol from the end is 1. Its
// determinization has 2^n reachable subsets.
Nfa nth_from_end_nfa(std::size_t n);

struct DescriptionMetrics {
    std::size_t states = 0;
    // DFA: states * max(1, ceil(log2 states)); NFA: states^2.
    std::uint64_t description_bits = 0;
};
DescriptionMetrics metrics(const Nfa& a);
DescriptionMetrics metrics(const Dfa& d);

// Line format:
//   dfa|nfa <state_count>
//   init <s...>
//   final <s...>
//   t <from> <0|1> <to...>
using Automaton = std::variant<Nfa, Dfa>;
void write_automaton(std::ostream& out, const Nfa& a);
void write_automaton(std::ostream& out, const Dfa& d);
Automaton read_automaton(std::istream& in);
Automaton parse_automaton(std::string_view text);

} // namespace rexlab
