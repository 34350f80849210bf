#pragma once

#include <stdexcept>
#include <string>

namespace esskel {

// Stable error taxonomy. Codes map 1:1 onto the C API status values and
// determine the CLI exit class (1 = domain error, 2 = I/O or syntax).
enum class ErrorCode {
  io,
  parse,
  validation,
  not_found,
  invalid_params,
  invalid_request,
  missing_forms,
  incomplete_divisor,
  incomplete_delta,
  dlt_violation,
  unsupported_dimension,
  empty_complex,
  containment,
  internal,
};

const char* error_code_name(ErrorCode c);

// 1 for domain errors, 2 for I/O and syntax errors.
int error_exit_class(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& message)
      : std::runtime_error(message), code(c) {}
};

}  // namespace esskel
