#pragma once

#include <stdexcept>
#include <string>

namespace mixsim {

// Malformed input text (edge lists, experiment spec files). Carries the
// 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace mixsim
