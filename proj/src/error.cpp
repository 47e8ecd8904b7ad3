#include "detourlab/error.hpp"

namespace detourlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidVertex: return "InvalidVertex";
    case ErrorKind::kLoopRejected: return "LoopRejected";
    case ErrorKind::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kEmptyGraph: return "EmptyGraph";
    case ErrorKind::kInvalidEdge: return "InvalidEdge";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kCheckpointMismatch: return "CheckpointMismatch";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (offset) {
    out += " (at byte ";
    out += std::to_string(*offset);
    out += ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(kind, message, offset)),
      kind_(kind),
      offset_(offset) {}

}  // namespace detourlab
