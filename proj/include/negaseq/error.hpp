#pragma once

#include <stdexcept>
#include <string>

namespace negaseq {

/// Raised when an argument violates an operation's documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested enumeration, graph, or export exceeds its size budget.
class budget_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Internal consistency failure (a formula branch or search produced an impossible value).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw precondition_error(what);
}

}  // namespace detail
}  // namespace negaseq
