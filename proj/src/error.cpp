#include "trifix/error.hpp"

#include <filesystem>

namespace trifix {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid_argument";
    case ErrorKind::kDegreeMismatch:
      return "degree_mismatch";
    case ErrorKind::kFlavorMismatch:
      return "flavor_mismatch";
    case ErrorKind::kMalformedModel:
      return "malformed_model";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::source_location where)
    : std::runtime_error(message), kind_(kind), where_(where) {}

std::string Error::location() const {
  return std::filesystem::path(where_.file_name()).filename().string() + ":" +
         std::to_string(where_.line()) + " (" + where_.function_name() + ")";
}

}  // namespace trifix
