#pragma once

#include <stdexcept>
#include <string>

namespace tgf {

/// Bad arguments or malformed input (CLI exit code 1).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Graph text that fails to parse. Carries the 1-based line number.
class ParseError : public InputError {
   public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// An enumeration would exceed its fixed size limit (CLI exit code 2).
class SizeGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace tgf
