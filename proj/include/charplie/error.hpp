#pragma once

#include <stdexcept>
#include <string>

namespace charplie {

/// Generic failure (bad arguments, broken preconditions, I/O).
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input is well-formed but outside the supported catalog/ranges.
/// The CLI maps this to exit code 2.
class unsupported_error : public error {
public:
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
/// The CLI maps this to exit code 3.
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& msg) : error(msg) {}
};

} // namespace charplie
