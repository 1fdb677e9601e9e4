#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iterode {

/// Division by a zero scalar, polynomial or rational function.
class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An intermediate result exceeded the configured size bound (see poly.hpp).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed.  This signals a defect in the
/// library, never bad user input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Rejected expression text; offset() is the byte position of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t offset)
        : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": " + message),
          message_(message), offset_(offset) {}

    std::size_t offset() const { return offset_; }

    /// The description without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

} // namespace iterode
