#pragma once

#include <stdexcept>
#include <string>

namespace gegenbauer {

enum class ErrorKind {
  invalid_argument,
  invalid_interval,
  tolerance_not_met,
  non_finite,
  divergent,
  ill_conditioned,
  calibration_failed,
  missing_fixture,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::invalid_argument, what);
}

}  // namespace gegenbauer
