#include "gfermat/error.hpp"

namespace gfermat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::IncompatibleOrder: return "IncompatibleOrder";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::SingularAffinePoint: return "SingularAffinePoint";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::NotAnInflection: return "NotAnInflection";
    case Errc::NotATangentDirection: return "NotATangentDirection";
    case Errc::InvalidS: return "InvalidS";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::DomainError: return "DomainError";
    case Errc::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case Errc::DegeneratePolygon: return "DegeneratePolygon";
    case Errc::VertexQuery: return "VertexQuery";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gfermat
