#include "packinglab/error.hpp"

namespace packinglab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DiscMismatch: return "DiscMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroRadius: return "ZeroRadius";
    case ErrorKind::NonUnitNormal: return "NonUnitNormal";
    case ErrorKind::InvalidWall: return "InvalidWall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::UnrepresentableAngle: return "UnrepresentableAngle";
    case ErrorKind::UnclassifiableEntry: return "UnclassifiableEntry";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::TooManyWalls: return "TooManyWalls";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::SingularCluster: return "SingularCluster";
    case ErrorKind::FrontierOverflow: return "FrontierOverflow";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::GaugeDeficient: return "GaugeDeficient";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::NonIntegralInput: return "NonIntegralInput";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace packinglab
