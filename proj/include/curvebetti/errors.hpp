#ifndef CURVEBETTI_ERRORS_HPP
#define CURVEBETTI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace curvebetti {

using Int = std::int64_t;

enum class ErrorKind {
  InvalidSequence,
  InvalidInput,
  NotCoprime,
  NotRepresentable,
  InvalidVertex,
  EmptyTable,
  WindowBreach,
  ScanTruncated,
  InternalWeightMismatch,
  Precondition,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::WindowBreach: return "WindowBreach";
    case ErrorKind::ScanTruncated: return "ScanTruncated";
    case ErrorKind::InternalWeightMismatch: return "InternalWeightMismatch";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

/// Every failure raised by the library. `details` carries a structured
/// payload (offending degrees, window bounds, ...) when one exists.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, nlohmann::json details = nullptr)
      : std::runtime_error(what), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& details() const noexcept { return details_; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json out;
    out["error"] = to_string(kind_);
    out["message"] = what();
    if (!details_.is_null()) out["details"] = details_;
    return out;
  }

private:
  ErrorKind kind_;
  nlohmann::json details_;
};

}  // namespace curvebetti

#endif  // CURVEBETTI_ERRORS_HPP
