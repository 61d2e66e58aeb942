#pragma once

#include <stdexcept>
#include <string>

namespace covg {

enum class Errc {
  LengthMismatch,
  AxiomViolation,
  NotAFlat,
  CapExceeded,
  EmptyRegion,
  EmptyLocus,
  UnknownFixture,
  InvalidChoice,
  NotHomogeneous,
  NotInvariant,
  NotAnAutomorphism,
  NotASubgroup,
  SizeMismatch,
  Parse,
  NonTermination,
  Internal,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace covg
