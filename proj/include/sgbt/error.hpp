#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgbt {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable name (e.g. "ParseError") used by the CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class LexError : public Error {
 public:
  LexError(std::size_t position, const std::string& reason)
      : Error("LexError", "lex error at offset " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found)
      : Error("ParseError", "parse error at token " + std::to_string(position) + ": expected " +
                                expected + ", found '" + found + "'"),
        position_(position),
        expected_(expected),
        found_(found) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("UnboundVariable", "unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace sgbt
