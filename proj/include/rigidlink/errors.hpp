#pragma once

#include <stdexcept>
#include <string>

namespace rigidlink {

/// Raised when graph input text is malformed. Carries the 1-based line
/// number of the offending line (0 when not line-oriented, e.g. JSON).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Raised when an operation's stated preconditions are violated
/// (invalid vertex id, adjacent pair where non-adjacency is required, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rigidlink
