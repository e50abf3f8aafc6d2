#pragma once

#include <stdexcept>
#include <string>

namespace biscornu {

/// Raised for arguments or file contents that violate a documented precondition.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure in one of the text formats; carries the 1-based source line.
class ParseError : public InvalidInput {
public:
    ParseError(int line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A constructive procedure ran out of attempts.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biscornu
