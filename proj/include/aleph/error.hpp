#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace aleph {

// Domain-rule violation. `code` is a stable machine-readable tag
// (NotBijective, TooLarge, RingMismatch, ...); the message carries the
// witness or detail. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Syntax error in an expression or payload. Reports the byte offset of the
// failure and the set of tokens that would have been accepted there.
// CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace aleph
