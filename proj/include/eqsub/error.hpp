#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqsub {

enum class Errc {
  NonAssociative,
  NoIdentity,
  NoInverse,
  OutOfRange,
  NotASubgroup,
  InvalidCocycle,
  NotValid,
  BadOrder,
  HNotNormal,
  HActsNontrivially,
  NotABicharacter,
  TauInvalid,
  InvalidData,
  MixedData,
  OmegaNontrivial,
  DataInvalid,
  LevelMismatch,
  ChecksumFailed,
  RoundingFailed,
  InvariantViolated,
  Parse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace eqsub
