#pragma once

#include <stdexcept>
#include <string>

namespace l6n1 {

enum class Errc {
  NotInvolution,
  NotSpherical,
  VertexlessComponent,
  ColourClassNotOneWalk,
  ColourNotStraight,
  MissingColour,
  MoveStale,
  NoValidSmoothing,
  NotPairwiseCrossing,
  NotIrreducible,
  UnknownIrreducible,
  StepMismatch,
  TooManyCrossings,
  WrongComponentCount,
  CapExceeded,
  Infeasible,
  ParseError,
  ValidationError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg, int line = -1);
  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based input line for ParseError, else -1

private:
  Errc code_;
  int line_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);
[[noreturn]] void fail_at(int line, const std::string& msg);

}  // namespace l6n1
