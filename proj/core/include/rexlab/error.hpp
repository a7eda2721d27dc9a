#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rexlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based character offset for
// regex text and a 1-based line number for line-oriented file formats.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A precondition on an argument was violated (wrong length, bad index, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A construction would exceed a configured resource cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace rexlab
