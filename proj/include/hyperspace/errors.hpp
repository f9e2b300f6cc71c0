#pragma once

#include <stdexcept>
#include <string>

namespace hyperspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text or document input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// A violated operation precondition. Subclasses name the precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnboundedInput : public PreconditionError {
 public:
  explicit UnboundedInput(const std::string& op)
      : PreconditionError(op + ": input has recession rays (bounded set required)") {}
};

class NotInNormalizingSet : public PreconditionError {
 public:
  explicit NotInNormalizingSet(const std::string& what)
      : PreconditionError("point outside the normalizing set: " + what) {}
};

class NotAVertex : public PreconditionError {
 public:
  explicit NotAVertex(const std::string& what) : PreconditionError("not a vertex: " + what) {}
};

class BadParameter : public PreconditionError {
 public:
  explicit BadParameter(const std::string& what) : PreconditionError("bad parameter: " + what) {}
};

class TargetOutsidePolar : public PreconditionError {
 public:
  explicit TargetOutsidePolar(const std::string& what)
      : PreconditionError("target vertex outside the polar ball: " + what) {}
};

class VariantPreconditionViolated : public PreconditionError {
 public:
  explicit VariantPreconditionViolated(const std::string& what)
      : PreconditionError("variant precondition violated: " + what) {}
};

class NotNested : public PreconditionError {
 public:
  explicit NotNested(const std::string& what)
      : PreconditionError("sequence is not nested: " + what) {}
};

}  // namespace hyperspace
