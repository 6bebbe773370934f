#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Precondition or domain violation (bad argument, mismatched rings, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured budget or cap was exceeded. Not a mathematical failure:
/// the question is merely undecided within the given resources.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Required external data (user-supplied presentation file etc.) is absent.
struct missing_data_error : std::runtime_error {
    explicit missing_data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal invariant broken. Always a bug, never a valid outcome.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace cgt
