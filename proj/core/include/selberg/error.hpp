#pragma once

#include <stdexcept>
#include <string>

namespace selberg {

/// Coarse classification used by the CLI to map failures onto exit codes.
enum class ErrorKind {
  invalid_rank,
  dimension,
  domain,
  parse,
  validation,
  singular,
  configuration,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace selberg
