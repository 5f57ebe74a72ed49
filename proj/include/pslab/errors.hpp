#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

// Invalid value or violated precondition. CLI exit code 1.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration would exceed the configured cap. CLI exit code 2.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or malformed input (I/O failure, bad schema, bad list syntax).
// CLI exit code 3.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pslab
