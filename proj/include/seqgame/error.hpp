#pragma once

#include <stdexcept>
#include <string>

namespace seqgame {

enum class ErrorCode {
  DegenerateConfig,
  UnknownLabel,
  WrongSide,
  ValueOverflow,
  CapacityMismatch,
  UnknownKind,
  LabelOutOfRange,
  AdviceUnsatisfiable,
  AdviceInconsistent,
  InsufficientPrograms,
  DemoInconclusive,
  MalformedTrace,
  ConfigError,
  ParseError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateConfig: return "DegenerateConfig";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::WrongSide: return "WrongSide";
    case ErrorCode::ValueOverflow: return "ValueOverflow";
    case ErrorCode::CapacityMismatch: return "CapacityMismatch";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::AdviceUnsatisfiable: return "AdviceUnsatisfiable";
    case ErrorCode::AdviceInconsistent: return "AdviceInconsistent";
    case ErrorCode::InsufficientPrograms: return "InsufficientPrograms";
    case ErrorCode::DemoInconclusive: return "DemoInconclusive";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seqgame
