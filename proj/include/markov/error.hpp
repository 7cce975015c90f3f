#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace markov {

// Domain error with a stable machine-readable code ("NotIrreducible",
// "RowSumInvalid", ...) next to the human-readable message. The CLI maps
// these to exit code 1; malformed input files map to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        message_(std::move(message)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

}  // namespace markov
