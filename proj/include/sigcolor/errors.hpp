#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigcolor {

// Base of every error raised for bad input or violated preconditions.
// Internal invariant failures (e.g. a lifted coloring failing re-verification)
// are std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotAWalk : public Error {
 public:
  using Error::Error;
};

class StructureMismatch : public Error {
 public:
  using Error::Error;
};

class NotDegenerate : public Error {
 public:
  explicit NotDegenerate(int k)
      : Error("graph is not " + std::to_string(k) + "-degenerate"), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

class NonSimpleInput : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class EpsOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadRadius : public Error {
 public:
  using Error::Error;
};

class InvalidInputColoring : public Error {
 public:
  using Error::Error;
};

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

class NotPositiveEdge : public Error {
 public:
  using Error::Error;
};

class PositiveLoopInContraction : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace sigcolor
