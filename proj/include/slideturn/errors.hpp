#pragma once

#include <stdexcept>
#include <string>

namespace slideturn {

/// Library error categories. The CLI maps ParseError/InvalidBody to exit
/// code 1 and everything else to exit code 2.
enum class Errc {
  NotDisjoint,
  NotOnBoundary,
  InteriorRequired,
  OutOfDomain,
  OutOfRange,
  NotOnSlideCurve,
  NotOnParallelBoundary,
  DegenerateBody,
  InvalidBody,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::NotOnBoundary: return "NotOnBoundary";
    case Errc::InteriorRequired: return "InteriorRequired";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotOnSlideCurve: return "NotOnSlideCurve";
    case Errc::NotOnParallelBoundary: return "NotOnParallelBoundary";
    case Errc::DegenerateBody: return "DegenerateBody";
    case Errc::InvalidBody: return "InvalidBody";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace slideturn
