#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ordrep {

// Base class for all domain errors thrown by the library. Parse/usage
// problems use ParseError; everything else signals a violated precondition
// or cap on otherwise well-formed input.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& label)
      : Error("unknown element label: " + label) {}
};

struct NotAPreorder : Error {
  using Error::Error;
};

struct NotAPartialOrder : Error {
  using Error::Error;
};

// Carries the failing axiom quadruple (element labels) and which axiom broke.
struct NotASemiorder : Error {
  NotASemiorder(const std::string& msg, std::vector<std::string> quad)
      : Error(msg), quadruple(std::move(quad)) {}
  std::vector<std::string> quadruple;
};

struct CyclicStrictPart : Error {
  using Error::Error;
};

struct NonPositiveAlpha : Error {
  using Error::Error;
};

struct PartialFunctionInTotalKind : Error {
  using Error::Error;
};

struct PartialUtilityForSS : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct UnknownExample : Error {
  explicit UnknownExample(const std::string& name)
      : Error("unknown example name: " + name) {}
};

struct DanglingReceive : Error {
  using Error::Error;
};

struct DuplicateMessageId : Error {
  using Error::Error;
};

struct CausalCycle : Error {
  using Error::Error;
};

}  // namespace ordrep
