#pragma once

#include <stdexcept>
#include <string>

namespace welldom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line` is 1-based for edge lists; for graph6 it is 1
/// and `offset` is the byte position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int offset = 0)
      : Error(what), line_(line), offset_(offset) {}
  int line() const noexcept { return line_; }
  int offset() const noexcept { return offset_; }

 private:
  int line_;
  int offset_;
};

/// An operation was called outside its domain (bad index, violated family
/// precondition, mismatched dimensions).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration budget was exceeded. Never a silent truncation.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicted an invariant the characterization relies on.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace welldom
