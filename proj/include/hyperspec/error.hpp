#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

enum class ErrorCode {
  invalid_argument,
  unknown_vertex,
  disconnected,
  not_converged,
  size_cap,
  linearity,
  non_simple,
  isolated_vertex,
  pendant_edge,
  not_equitable,
  not_partition,
  budget_exceeded,
  parse_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperspec
