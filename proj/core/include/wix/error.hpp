#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wix {

/// Syntax error in an expression, a series string, or a JSON document.
/// `position` is the zero-based offset into the input where parsing failed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A search was refused because its parameters exceed the configured budget.
/// Distinct from infeasibility: an aborted search is never a negative answer.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wix
