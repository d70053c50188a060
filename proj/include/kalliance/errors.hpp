#pragma once

#include <stdexcept>
#include <string>

namespace kalliance {

// Raised when a graph exceeds a hard size cap (solver n>64, oracle n>12, verifier n>10).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed graph files or generator specs.
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace kalliance
