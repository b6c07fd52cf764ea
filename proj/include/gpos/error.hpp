#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpos {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; offset is the byte position of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string & message, std::size_t offset) :
        Error(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    auto offset() const -> std::size_t { return offset_; }

private:
    std::size_t offset_;
};

/// An operation was applied outside its mathematical domain (e.g. a
/// disconnected graph where distances must be finite).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a documented size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Invalid family, corpus or statement text.
class SpecError : public Error {
public:
    using Error::Error;
};

} // namespace gpos
