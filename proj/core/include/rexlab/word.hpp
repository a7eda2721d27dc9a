#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rexlab {

using Bit = std::uint8_t;

// A finite word over {0,1}.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Bit> bits);

    // Accepts a string of '0'/'1' characters; anything else is a ParseError.
    static Word parse(std::string_view text);
    static Word zeros(std::size_t length);
    // `value` written big-endian into exactly `length` bits.
    static Word from_index(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }
    std::span<const Bit> bits() const noexcept { return bits_; }

    void push_back(Bit b);
    void append(const Word& other);
    Word slice(std::size_t offset, std::size_t length) const;
    // Big-endian value of the whole word; words longer than 64 bits are rejected.
    std::uint64_t to_index() const;

    std::string to_string() const;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Bit> bits_;
};

// Length first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

} // namespace rexlab
