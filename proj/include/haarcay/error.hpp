#pragma once

#include <stdexcept>
#include <string>

namespace haarcay {

enum class ErrorCode {
  parse_error,
  invalid_parameter,
  invalid_presentation,
  invalid_connection_set,
  not_bipartite,
  invalid_witness,
  resource_limit,
  internal_verification_failure,
  io_error,
};

const char *error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

} // namespace haarcay
