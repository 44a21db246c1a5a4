#include "eqsub/error.hpp"

namespace eqsub {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::InvalidCocycle: return "InvalidCocycle";
    case Errc::NotValid: return "NotValid";
    case Errc::BadOrder: return "BadOrder";
    case Errc::HNotNormal: return "HNotNormal";
    case Errc::HActsNontrivially: return "HActsNontrivially";
    case Errc::NotABicharacter: return "NotABicharacter";
    case Errc::TauInvalid: return "TauInvalid";
    case Errc::InvalidData: return "InvalidData";
    case Errc::MixedData: return "MixedData";
    case Errc::OmegaNontrivial: return "OmegaNontrivial";
    case Errc::DataInvalid: return "DataInvalid";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::ChecksumFailed: return "ChecksumFailed";
    case Errc::RoundingFailed: return "RoundingFailed";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace eqsub
