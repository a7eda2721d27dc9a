#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rexlab/regex.hpp"
#include "rexlab/word.hpp"

namespace rexlab {

class DerivativeEngine;

// True iff ε ∈ L(r).
bool nullable(const Regex& r);

// Brzozowski derivative with respect to one symbol, returned in simplified
// form (ACI-normalised unions and intersections, ∅/ε absorption, !!r = r).
Regex derivative(const Regex& r, Bit b);

// Membership tester for one expression. Derivative states are interned and
// transitions cached, so the matcher behaves like a lazily built DFA.
// Safe to share between threads.
class Matcher {
public:
    explicit Matcher(const Regex& r);
    ~Matcher();
    Matcher(Matcher&&) noexcept;
    Matcher& operator=(Matcher&&) noexcept;

    bool matches(const Word& w) const;
    bool operator()(const Word& w) const { return matches(w); }

    // Distinct derivative states discovered so far.
    std::size_t explored_states() const;

private:
    std::unique_ptr<DerivativeEngine> engine_;
    std::uint32_t root_ = 0;
    mutable std::unique_ptr<std::mutex> mutex_;
};

bool matches(const Regex& r, const Word& w);

inline constexpr std::size_t kDefaultEnumerationBound = 12;

// All members of L(r) with length ≤ max_len.
class LanguageSample {
public:
    explicit LanguageSample(std::size_t max_len);

    std::size_t max_len() const noexcept { return max_len_; }
    bool contains(const Word& w) const;
    std::size_t size() const;
    // Shortlex order.
    std::vector<Word> words() const;

    // Position of w in the shortlex enumeration of Σ^{≤max_len}.
    static std::size_t slot(const Word& w);
    static Word word_at(std::size_t slot);

    const std::vector<bool>& membership() const noexcept { return bits_; }
    std::vector<bool>& membership() noexcept { return bits_; }

    bool operator==(const LanguageSample&) const = default;

private:
    std::size_t max_len_;
    std::vector<bool> bits_;
};

// Bottom-up set semantics over Σ^{≤max_len}; independent of the derivative
// engine and used as its oracle. Refuses max_len above `bound`.
LanguageSample enumerate_language(const Regex& r, std::size_t max_len,
                                  std::size_t bound = kDefaultEnumerationBound);

struct Equivalence {
    bool equivalent = true;
    // Shortlex-least word in exactly one of the two languages.
    std::optional<Word> counterexample;

    explicit operator bool() const noexcept { return equivalent; }
};

Equivalence equivalent_upto(const Regex& a, const Regex& b, std::size_t max_len,
                            std::size_t bound = kDefaultEnumerationBound);

} // namespace rexlab
