#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

/// Malformed or out-of-contract input. Parsers attach the offending line
/// number when they have one.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// The instance is valid but beyond what a brute-force routine accepts.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ssc
