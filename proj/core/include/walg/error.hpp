#pragma once

#include <stdexcept>
#include <string>

namespace walg {

enum class ErrorCode {
  ZeroDenominator,
  PoleAtEvaluationPoint,
  DisallowedPole,
  ParseError,
  MixedTables,
  NonIntegralExponents,
  NotUnimodal,
  InvalidColumn,
  InvalidShape,
  NoSolution,
  NonUniqueSolution,
  ShapeMismatch,
  BadSplit,
  SingularSystem,
  SizeBound,
  InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace walg
