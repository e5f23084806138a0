#include "haarcay/error.hpp"

namespace haarcay {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::parse_error: return "parse-error";
  case ErrorCode::invalid_parameter: return "invalid-parameter";
  case ErrorCode::invalid_presentation: return "invalid-presentation";
  case ErrorCode::invalid_connection_set: return "invalid-connection-set";
  case ErrorCode::not_bipartite: return "not-bipartite";
  case ErrorCode::invalid_witness: return "invalid-witness";
  case ErrorCode::resource_limit: return "resource-limit";
  case ErrorCode::internal_verification_failure: return "internal-verification-failure";
  case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

} // namespace haarcay
