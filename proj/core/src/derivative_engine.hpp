#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rexlab/regex.hpp"

namespace rexlab {

// Hash-consed term store for derivative-based matching. Every term is
// built through smart constructors, so two terms with the same id denote
// the same language and equal ids are the only equality we need.
class DerivativeEngine {
public:
    using Id = std::uint32_t;

    DerivativeEngine();

    Id intern(const Regex& r);
    Regex to_regex(Id id);

    Id derive(Id id, Bit b);
    bool nullable(Id id) const { return terms_[id].nullable; }

    Id empty_set() const { return empty_; }
    Id epsilon() const { return epsilon_; }
    Id sigma_star() const { return sigma_star_; }
    std::size_t term_count() const { return terms_.size(); }

private:
    struct Term {
        RegexKind kind;
        Bit bit = 0;
        std::uint64_t reps = 0;
        // Union and Inter store a sorted, duplicate-free operand list;
        // other kinds use at most the first two entries.
        std::vector<Id> kids;
        bool nullable = false;
    };

    struct TermHash {
        std::size_t operator()(const Term& t) const noexcept;
    };
    struct TermEq {
        bool operator()(const Term& a, const Term& b) const noexcept {
            return a.kind == b.kind && a.bit == b.bit && a.reps == b.reps && a.kids == b.kids;
        }
    };

    Id make(Term t);

    Id mk_symbol(Bit b);
    Id mk_union(std::vector<Id> operands);
    Id mk_inter(std::vector<Id> operands);
    Id mk_concat(Id a, Id b);
    Id mk_star(Id a);
    Id mk_compl(Id a);
    Id mk_count(Id a, std::uint64_t reps);

    static constexpr Id kUnset = ~Id{0};

    std::vector<Term> terms_;
    std::unordered_map<Term, Id, TermHash, TermEq> index_;
    std::vector<std::array<Id, 2>> delta_;
    std::unordered_map<Id, Regex> exported_;
    Id empty_ = 0;
    Id epsilon_ = 0;
    Id sigma_star_ = 0;
};

} // namespace rexlab
