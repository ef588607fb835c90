#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class ErrorKind {
  invalid_pair,
  duplicate_in_batch,
  invalid_k,
  invalid_batch_size,
  invalid_spec,
  malformed_instance,
  parse_error,
  internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI)
/// can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tourney
