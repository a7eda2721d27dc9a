#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rexlab/word.hpp"

namespace rexlab {

enum class RegexKind : std::uint8_t {
    EmptySet,
    Epsilon,
    Symbol,
    Union,
    Concat,
    Star,
    Inter,
    Compl,
    Count,
};

// Immutable extended regular expression over {0,1}.
//
// Nodes are shared, never mutated, and compared structurally. The factory
// functions build exactly the requested node with no simplification, so a
// parsed tree prints back to the same shape.
class Regex {
public:
    // The empty-set expression.
    Regex();

    static Regex empty_set();
    static Regex epsilon();
    static Regex symbol(Bit bit);
    static Regex alt(Regex left, Regex right);
    static Regex concat(Regex left, Regex right);
    static Regex star(Regex inner);
    static Regex inter(Regex left, Regex right);
    static Regex complement(Regex inner);
    // Count(r, 0) denotes {ε}.
    static Regex count(Regex inner, std::uint64_t reps);

    RegexKind kind() const noexcept;
    // Symbol nodes only.
    Bit bit() const;
    // Union, Concat and Inter nodes.
    Regex left() const;
    Regex right() const;
    // Star, Compl and Count nodes.
    Regex inner() const;
    // Count nodes only.
    std::uint64_t reps() const;

    bool is_atom() const noexcept;
    bool same_node(const Regex& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Regex& a, const Regex& b);

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Which operators an expression may use.
struct OperatorProfile {
    bool allow_star = true;
    bool allow_inter = false;
    bool allow_compl = false;
    bool allow_count = false;

    static OperatorProfile plain() { return {}; }
    static OperatorProfile with_inter() { return {true, true, false, false}; }
    static OperatorProfile with_compl() { return {true, false, true, false}; }
    static OperatorProfile star_free() { return {false, false, false, false}; }
    static OperatorProfile counting() { return {false, false, false, true}; }
    static OperatorProfile extended() { return {true, true, true, true}; }
};

bool conforms(const Regex& r, const OperatorProfile& profile);
bool contains_kind(const Regex& r, RegexKind kind);

// Size in atoms and operators. Concatenation and parentheses are free; a
// count node r{k} costs |r| + ceil(log2 k) when counting is allowed and
// k * |r| otherwise.
std::uint64_t size_of(const Regex& r, bool counting_allowed);

struct SizeReport {
    std::uint64_t size = 0;
    // Count(r, 0) nodes sized without counting. They contribute 0 even though
    // they denote {ε}.
    std::size_t zero_count_nodes = 0;
};
SizeReport size_report(const Regex& r, bool counting_allowed);

// ceil(log2 k) with ceil(log2 0) taken as 1 and ceil(log2 1) as 0.
std::uint64_t counter_digits(std::uint64_t k);

enum class PrintStyle {
    Minimal,
    FullyParenthesized,
};

// Concrete syntax: atoms `0` `1` `e` `@`, postfix `*` and `{k}`, prefix `!`,
// infix `&` and `|`, juxtaposition for concatenation. Binary operators
// associate to the right.
std::string print(const Regex& r, PrintStyle style = PrintStyle::Minimal);
Regex parse(std::string_view text);

Regex desugar_count(const Regex& r);

Regex literal_word(const Word& w);
// (0|1)
Regex any_symbol();
// (0|1)*
Regex sigma_star();
// Right-nested; an empty list gives Epsilon.
Regex concat_all(std::span<const Regex> factors);
// Right-nested; an empty list gives EmptySet.
Regex union_all(std::span<const Regex> branches);

// Appends r^k to a factor list: nothing for k = 0, r itself for k = 1,
// otherwise a Count node or k copies of r.
void append_power(std::vector<Regex>& factors, const Regex& r, std::uint64_t k, bool keep_count);

bool is_power_of_two(std::uint64_t n) noexcept;
// log2 of a power of two.
std::size_t exact_log2(std::uint64_t n);

// Index i in [1, n] as the big-endian (i - 1) in log2(n) bits.
Word bin_index(std::uint64_t i, std::uint64_t n);
// Inverse of bin_index for a block of log2(n) bits.
std::uint64_t decode_bin_index(std::span<const Bit> block);

} // namespace rexlab
