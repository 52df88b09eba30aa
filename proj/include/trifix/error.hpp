#pragma once

#include <source_location>
#include <stdexcept>
#include <string>

namespace trifix {

enum class ErrorKind {
  kInvalidArgument,
  kDegreeMismatch,
  kFlavorMismatch,
  kMalformedModel,
};

const char* to_string(ErrorKind kind);

// All failures raised by the core modules. Carries the throwing site so the
// CLI can report where a mismatch was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::source_location where = std::source_location::current());

  ErrorKind kind() const noexcept { return kind_; }
  const std::source_location& where() const noexcept { return where_; }
  std::string location() const;

 private:
  ErrorKind kind_;
  std::source_location where_;
};

}  // namespace trifix
