#include "storyplan/error.hpp"

namespace storyplan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Not2Tree: return "Not2Tree";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::MissingPosition: return "MissingPosition";
    case ErrorCode::NoFeasibleRegion: return "NoFeasibleRegion";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::IsK4: return "IsK4";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::HasTriangle: return "HasTriangle";
    case ErrorCode::NotOuterplanar: return "NotOuterplanar";
    case ErrorCode::CactusViolation: return "CactusViolation";
    case ErrorCode::ClaimViolation: return "ClaimViolation";
    case ErrorCode::NoGoodVertex: return "NoGoodVertex";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FramesNotPlanar: return "FramesNotPlanar";
    case ErrorCode::NoApplicablePlanner: return "NoApplicablePlanner";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace storyplan
