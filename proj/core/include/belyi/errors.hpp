#pragma once

#include <stdexcept>
#include <string>

namespace belyi {

// Base for all domain errors thrown by this library.  The CLI maps these to
// exit code 2 with the message naming the violated precondition.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error(w) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error(w) {}
};

struct NotRational : Error {
  explicit NotRational(const std::string& w) : Error(w) {}
};

struct UndefinedParameters : Error {
  explicit UndefinedParameters(const std::string& w) : Error(w) {}
};

struct DegenerateParameters : Error {
  explicit DegenerateParameters(const std::string& w) : Error(w) {}
};

struct InputDegenerate : Error {
  explicit InputDegenerate(const std::string& w) : Error(w) {}
};

struct DegenerateRoot : Error {
  explicit DegenerateRoot(const std::string& w) : Error(w) {}
};

struct AllDegenerate : Error {
  explicit AllDegenerate(const std::string& w) : Error(w) {}
};

struct NoPreimage : Error {
  explicit NoPreimage(const std::string& w) : Error(w) {}
};

struct Degenerate : Error {
  explicit Degenerate(const std::string& w) : Error(w) {}
};

struct DegenerateFiber : Error {
  explicit DegenerateFiber(const std::string& w) : Error(w) {}
};

struct VZero : Error {
  explicit VZero(const std::string& w) : Error(w) {}
};

struct NotOnCurve : Error {
  explicit NotOnCurve(const std::string& w) : Error(w) {}
};

struct SingularFiber : Error {
  explicit SingularFiber(const std::string& w) : Error(w) {}
};

struct ExcludedFiber : Error {
  explicit ExcludedFiber(const std::string& w) : Error(w) {}
};

struct WZero : Error {
  explicit WZero(const std::string& w) : Error(w) {}
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& w) : Error(w) {}
};

struct ParityInvalid : Error {
  explicit ParityInvalid(const std::string& w) : Error(w) {}
};

struct DegenerateChart : Error {
  explicit DegenerateChart(const std::string& w) : Error(w) {}
};

struct PoleOfMap : Error {
  explicit PoleOfMap(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

}  // namespace belyi
