#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rexlab/regex.hpp"
#include "rexlab/word.hpp"

namespace rexlab {

struct Literal {
    std::size_t var = 1;  // 1-based
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

using Term = std::vector<Literal>;

// Disjunction of conjunctive terms over variables x_1..x_n.
struct Dnf {
    std::size_t n = 0;
    std::vector<Term> terms;

    // Total literal count.
    std::size_t size() const;
    // Throws DomainError on out-of-range variables or a variable repeated
    // within one term.
    void validate() const;
};

bool eval_dnf(const Dnf& phi, const Word& x);

// One factor per position: 1 for x_i, 0 for ¬x_i, (0|1) when x_i is absent;
// terms joined by a right-nested union. No terms gives ∅, an empty term
// accepts every length-n word.
Regex dnf_to_re(const Dnf& phi);

enum class FormulaKind : std::uint8_t { Var, Not, And, Or };

// Immutable Boolean formula AST.
class Formula {
public:
    static Formula var(std::size_t index);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);

    FormulaKind kind() const noexcept;
    std::size_t index() const;  // Var only, 1-based
    const Formula& operand() const;  // Not only
    const Formula& left() const;
    const Formula& right() const;

    // Node count.
    std::size_t size() const;
    std::size_t max_var() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct BooleanFormula {
    std::size_t n = 0;
    Formula root = Formula::var(1);

    std::size_t size() const { return root.size(); }
    void validate() const;
};

bool eval_formula(const BooleanFormula& phi, const Word& x);

// Pushes negations down to variables and removes double negations.
BooleanFormula nnf(const BooleanFormula& phi);
bool is_nnf(const Formula& f);

enum class FormulaTarget { Inter, Neg };

// Literal gadgets (0|1)^{i-1} b (0|1)^{n-i}. Conjunction becomes `&`
// (Inter) or !(!a | !b) (Neg). The padding powers are Count nodes when
// counting is allowed and unrolled otherwise. Membership is only meaningful
// on words of length n.
Regex formula_to_re(const BooleanFormula& phi, FormulaTarget target, bool counting_allowed);

Word pad_input(const Word& x, std::size_t target_len);
// r followed by 0^pad.
Regex pad_regex(const Regex& r, std::size_t pad);

// DNF text:
//   dnf <n> <m>
//   one term per line as signed 1-based indices ("+3 -1" is x3 ∧ ¬x1)
void write_dnf(std::ostream& out, const Dnf& phi);
Dnf parse_dnf(std::string_view text);

// Formula text: an optional header line "formula <n>" followed by a prefix
// s-expression, e.g. (and (var 1) (not (var 2))). Without the header n is
// the largest variable index.
std::string print_formula(const Formula& f);
void write_formula(std::ostream& out, const BooleanFormula& phi);
BooleanFormula parse_formula(std::string_view text);

} // namespace rexlab
