#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gknn {

// Base class for all library errors. `code()` is a short stable identifier
// for machine consumption; the CLI prints failures as "ERR <code>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed input bytes: image files, model files, CSV rows.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message) : Error("bad-format", message) {}
};

// The glyph is empty where ink was required (e.g. nothing left after opening).
class BlankInputError : public Error {
 public:
  explicit BlankInputError(const std::string& message) : Error("blank-input", message) {}
};

// A caller violated an operation's contract.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& message) : Error("contract", message) {}
};

// Filesystem-level failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

}  // namespace gknn
