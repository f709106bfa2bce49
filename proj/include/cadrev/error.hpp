// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cadrev {

// All recoverable failures carry a stable machine-readable code next to the
// human-readable message. CLI layers map codes to structured error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

namespace errc {
inline constexpr const char* range = "range";
inline constexpr const char* capacity = "capacity";
inline constexpr const char* decode = "decode";
inline constexpr const char* parse = "parse";
inline constexpr const char* arity = "arity";
inline constexpr const char* invalid_sequence = "invalid_sequence";
inline constexpr const char* degenerate_geometry = "degenerate_geometry";
inline constexpr const char* empty_solid = "empty_solid";
inline constexpr const char* empty_mesh = "empty_mesh";
inline constexpr const char* empty_input = "empty_input";
inline constexpr const char* shape = "shape";
inline constexpr const char* load = "load";
inline constexpr const char* io = "io";
inline constexpr const char* generation = "generation";
inline constexpr const char* numeric = "numeric";
}  // namespace errc

}  // namespace cadrev
