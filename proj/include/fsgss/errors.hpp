#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsgss {

// Base for every domain failure raised by the library. CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A random draw landed on an identity element; callers redraw.
class DegenerateDraw : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class DuplicateMember : public Error {
 public:
  using Error::Error;
};

class UnknownMember : public Error {
 public:
  using Error::Error;
};

class CredentialInvalid : public Error {
 public:
  using Error::Error;
};

class MalformedSignature : public Error {
 public:
  using Error::Error;
};

class RefusedUnverified : public Error {
 public:
  using Error::Error;
};

class OracleTooWeak : public Error {
 public:
  using Error::Error;
};

// A message arrived in a state that does not expect it.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  // 1-based line of the offending input, 0 when not line-oriented.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fsgss
