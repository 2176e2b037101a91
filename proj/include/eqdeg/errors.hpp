#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqdeg {

/// Bad caller-supplied arguments (out-of-range vertex, loop edge, bad parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed serialized data. `offset()` is the byte position where decoding failed.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The requested run exceeds what the engine is willing to attempt.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input does not meet a precondition the operation relies on.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace eqdeg
