#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace wpcy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = long long;

// Failure classes carried by every exception thrown from the library.  The CLI
// maps them onto its exit codes: validation failures (an internally computed
// result contradicts an independent check) are distinguished from resource
// bounds and from malformed input.
enum class ErrorCode {
  BadInput,
  ValidationFailure,
  BoundExceeded,
  GcdObstruction,
  Undefined,
  RoundingAmbiguity,
  Unsupported,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, ErrorCode c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace wpcy
