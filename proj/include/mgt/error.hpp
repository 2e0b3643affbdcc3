#pragma once

#include <stdexcept>
#include <string>

namespace mgt {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-range argument (bad index, non-subgroup input, unknown family).
class ArgumentError : public Error {
public:
  using Error::Error;
};

// Text that does not conform to the cycle-notation or group-spec grammar.
class ParseError : public Error {
public:
  using Error::Error;
};

// Construction would exceed the configured maximum group order.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

// A table presented as a group fails one of the group axioms.
// The message carries the first violating instance.
class NotAGroupError : public Error {
public:
  using Error::Error;
};

// Subgroups do not exactly factorize the ambient group.
class NotExactError : public Error {
public:
  using Error::Error;
};

// Squares whose edges do not match cannot be composed.
class NotComposableError : public Error {
public:
  using Error::Error;
};

// No square (or more than one) fills the requested edges.
class FillerError : public Error {
public:
  using Error::Error;
};

}  // namespace mgt
