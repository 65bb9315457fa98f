#include "l6n1/errors.hpp"

namespace l6n1 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NotSpherical: return "NotSpherical";
    case Errc::VertexlessComponent: return "VertexlessComponent";
    case Errc::ColourClassNotOneWalk: return "ColourClassNotOneWalk";
    case Errc::ColourNotStraight: return "ColourNotStraight";
    case Errc::MissingColour: return "MissingColour";
    case Errc::MoveStale: return "MoveStale";
    case Errc::NoValidSmoothing: return "NoValidSmoothing";
    case Errc::NotPairwiseCrossing: return "NotPairwiseCrossing";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::UnknownIrreducible: return "UnknownIrreducible";
    case Errc::StepMismatch: return "StepMismatch";
    case Errc::TooManyCrossings: return "TooManyCrossings";
    case Errc::WrongComponentCount: return "WrongComponentCount";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::Infeasible: return "Infeasible";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg, int line)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code),
      line_(line) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

void fail_at(int line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace l6n1
