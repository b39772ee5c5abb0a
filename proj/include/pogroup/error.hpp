#pragma once

#include <stdexcept>
#include <string>

namespace pogroup {

enum class ErrorKind {
  InvalidInput,
  RankMismatch,
  ModeMismatch,
  NonPointedCone,
  NotFullDimensional,
  ConversionOverflow,
  FaceNotInLattice,
  NotProvenClosed,
  BoxTooSmall,
  BoxTooLarge,
  GeneratorOutsideHull,
  DegreeOutsideBox,
  DimensionMismatch,
  DecompositionUnionMismatch,
  InjectivityFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace pogroup
