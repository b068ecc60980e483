#pragma once

#include <stdexcept>
#include <string>

namespace ncsimo {

enum class ErrorKind {
  DegenerateInput,
  NumericalDomain,
  InvalidParam,
  SingularPoint,
  InvalidRegime,
  LowSnrRegime,
  RegimeUnsupported,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncsimo
