#pragma once

#include <stdexcept>
#include <string>

namespace spiro {

enum class ErrorCode {
  UnsupportedDegree,
  ChainTooShort,
  InvalidN,
  InvalidProbabilities,
  NTooLarge,
  UndefinedBase,
  KindMismatch,
  UnknownIndex,
  MissingExponent,
  DegenerateVariance,
  Overflow,
  EmptySample,
  SampleTooSmall,
  InvalidGraph,
  InvalidLinks,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& what) : Error(C, what) {}
};

using UnsupportedDegree = TypedError<ErrorCode::UnsupportedDegree>;
using ChainTooShort = TypedError<ErrorCode::ChainTooShort>;
using InvalidN = TypedError<ErrorCode::InvalidN>;
using InvalidProbabilities = TypedError<ErrorCode::InvalidProbabilities>;
using NTooLarge = TypedError<ErrorCode::NTooLarge>;
using UndefinedBase = TypedError<ErrorCode::UndefinedBase>;
using KindMismatch = TypedError<ErrorCode::KindMismatch>;
using UnknownIndex = TypedError<ErrorCode::UnknownIndex>;
using MissingExponent = TypedError<ErrorCode::MissingExponent>;
using DegenerateVariance = TypedError<ErrorCode::DegenerateVariance>;
using Overflow = TypedError<ErrorCode::Overflow>;
using EmptySample = TypedError<ErrorCode::EmptySample>;
using SampleTooSmall = TypedError<ErrorCode::SampleTooSmall>;
using InvalidGraph = TypedError<ErrorCode::InvalidGraph>;
using InvalidLinks = TypedError<ErrorCode::InvalidLinks>;

}  // namespace spiro
