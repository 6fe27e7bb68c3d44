#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cusp {

// Violated mathematical precondition: division by a jet with zero constant
// term, inflection point at t = 0, exhausted truncation order, and so on.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// The exact-rational backend cannot represent the requested value (square
// root of a non-square rational, sin/cos/exp of a nonzero constant term).
// Callers may catch this and retry with the floating-point backend.
class exact_error : public domain_error {
public:
    explicit exact_error(const std::string& what) : domain_error(what) {}
};

// Expression syntax error. `position` is a byte offset into the input,
// `expected` names the token class the parser was looking for.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position, std::string expected)
        : std::runtime_error(what), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace cusp
