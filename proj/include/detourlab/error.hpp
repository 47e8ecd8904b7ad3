#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace detourlab {

enum class ErrorKind {
  kInvalidVertex,
  kLoopRejected,
  kOrderCapExceeded,
  kParseError,
  kEmptyGraph,
  kInvalidEdge,
  kTooSmall,
  kInvalidParameter,
  kInvalidSpec,
  kCheckpointMismatch,
  kIo,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; parse errors additionally carry the byte offset of the fault.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace detourlab
