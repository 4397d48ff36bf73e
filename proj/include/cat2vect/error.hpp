#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cat2vect {

/// Error with a stable machine-readable code plus a human-readable detail.
/// Codes are used by the CLI to classify failures and by tests to assert
/// on specific failure modes.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace cat2vect
