#include "algstat/error.hpp"

namespace algstat {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroSaturand: return "ZeroSaturand";
    case ErrorCode::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::AdjacentPair: return "AdjacentPair";
    case ErrorCode::NotLevelOne: return "NotLevelOne";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::UnsupportedGraphKind: return "UnsupportedGraphKind";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
    case ErrorCode::InvalidTemplate: return "InvalidTemplate";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NotHybridEdge: return "NotHybridEdge";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NotGroupBased: return "NotGroupBased";
    case ErrorCode::ZeroImage: return "ZeroImage";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace algstat
