#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmw {

/// An argument falls outside the domain of a model equation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed configuration text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A well-formed configuration value that is out of range.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(key)
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mmw
