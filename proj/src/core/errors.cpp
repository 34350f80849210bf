#include "core/errors.hpp"

namespace esskel {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::io: return "io_error";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::validation: return "validation_error";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::invalid_params: return "invalid_params";
    case ErrorCode::invalid_request: return "invalid_request";
    case ErrorCode::missing_forms: return "missing_forms";
    case ErrorCode::incomplete_divisor: return "incomplete_divisor";
    case ErrorCode::incomplete_delta: return "incomplete_delta";
    case ErrorCode::dlt_violation: return "dlt_violation";
    case ErrorCode::unsupported_dimension: return "unsupported_dimension";
    case ErrorCode::empty_complex: return "empty_complex";
    case ErrorCode::containment: return "containment_error";
    case ErrorCode::internal: return "internal_error";
  }
  return "unknown_error";
}

int error_exit_class(ErrorCode c) {
  switch (c) {
    case ErrorCode::io:
    case ErrorCode::parse:
      return 2;
    default:
      return 1;
  }
}

}  // namespace esskel
