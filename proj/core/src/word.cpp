#include "rexlab/word.hpp"

#include <algorithm>

#include "rexlab/error.hpp"

namespace rexlab {

Word::Word(std::vector<Bit> bits) : bits_(std::move(bits)) {
    for (Bit b : bits_) {
        if (b > 1) {
            throw DomainError("word symbols must be 0 or 1");
        }
    }
}

Word Word::parse(std::string_view text) {
    Word w;
    w.bits_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError("invalid symbol '" + std::string(1, c) + "' in word", i);
        }
        w.bits_.push_back(static_cast<Bit>(c - '0'));
    }
    return w;
}

Word Word::zeros(std::size_t length) {
    Word w;
    w.bits_.assign(length, 0);
    return w;
}

Word Word::from_index(std::uint64_t value, std::size_t length) {
    if (length < 64 && (value >> length) != 0) {
        throw DomainError("value does not fit in " + std::to_string(length) + " bits");
    }
    Word w;
    w.bits_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        std::size_t shift = length - 1 - i;
        w.bits_[i] = shift >= 64 ? 0 : static_cast<Bit>((value >> shift) & 1U);
    }
    return w;
}

void Word::push_back(Bit b) {
    if (b > 1) {
        throw DomainError("word symbols must be 0 or 1");
    }
    bits_.push_back(b);
}

void Word::append(const Word& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

Word Word::slice(std::size_t offset, std::size_t length) const {
    if (offset > bits_.size() || length > bits_.size() - offset) {
        throw DomainError("slice out of range");
    }
    Word w;
    w.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
    return w;
}

std::uint64_t Word::to_index() const {
    if (bits_.size() > 64) {
        throw DomainError("word too long to index");
    }
    std::uint64_t v = 0;
    for (Bit b : bits_) {
        v = (v << 1) | b;
    }
    return v;
}

std::string Word::to_string() const {
    std::string s(bits_.size(), '0');
    std::transform(bits_.begin(), bits_.end(), s.begin(),
                   [](Bit b) { return static_cast<char>('0' + b); });
    return s;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

} // namespace rexlab
