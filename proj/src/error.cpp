#include "spiro/error.hpp"

namespace spiro {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ChainTooShort: return "ChainTooShort";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidProbabilities: return "InvalidProbabilities";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::UndefinedBase: return "UndefinedBase";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::MissingExponent: return "MissingExponent";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidLinks: return "InvalidLinks";
  }
  return "Unknown";
}

}  // namespace spiro
