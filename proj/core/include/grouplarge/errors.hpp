#pragma once

#include <stdexcept>
#include <string>

namespace grouplarge {

class Error : public std::runtime_error {
 public:
  enum class Code {
    UnknownGenerator,
    MalformedExponent,
    EmptyInput,
    AlphabetMismatch,
    IdentityHasNoBoundary,
    DomainTooLarge,
    InvalidPairing,
    SameLetters,
    WrongRank,
    SectionNotRightInverse,
    HypothesisViolated,
    Infeasible,
    EnumeratorInconsistent,
    ProbeExhausted,
    InvalidArgument,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace grouplarge
