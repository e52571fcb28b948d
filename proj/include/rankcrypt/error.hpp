// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rankcrypt {

enum class ErrorCode {
  InvalidArgument,
  ShapeMismatch,
  LayerMismatch,
  TowerMismatch,
  SingularMatrix,
  ZeroInverse,
  DependentPoints,
  ParameterViolation,
  CapExceeded,
  CyclicTopology,
  Unreachable,
  NoReceivers,
  UnknownEdge,
  Parse,
  Io,
};

const char* to_string(ErrorCode code);

// Contract violations throw; expected decoding outcomes are reported through
// DecodeStatus instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace rankcrypt
