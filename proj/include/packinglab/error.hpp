#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace packinglab {

enum class ErrorKind {
  DiscMismatch,
  DivisionByZero,
  ParseError,
  ZeroRadius,
  NonUnitNormal,
  InvalidWall,
  DimensionMismatch,
  BadMultiplicity,
  DuplicateEdge,
  UnrepresentableAngle,
  UnclassifiableEntry,
  InvalidDecomposition,
  TooManyWalls,
  SingularGram,
  SingularCluster,
  FrontierOverflow,
  NoConvergence,
  GaugeDeficient,
  NoCandidate,
  Ambiguous,
  NonIntegralInput,
  UnsupportedDimension,
  InvalidInput,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind. The CLI maps these to exit
/// code 1 and a JSON object on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace packinglab
