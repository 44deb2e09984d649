#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfermat {

enum class Errc {
  CompositeCharacteristic,
  ReducibleModulus,
  InvalidModulus,
  ZeroInput,
  IncompatibleOrder,
  FieldMismatch,
  Overflow,
  DegenerateParams,
  DegreeTooSmall,
  SingularAffinePoint,
  PrecisionTooLow,
  NotAnInflection,
  NotATangentDirection,
  InvalidS,
  CharacteristicTooSmall,
  DomainError,
  EmptyFeasibleSet,
  DegeneratePolygon,
  VertexQuery,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this type; code() identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gfermat
