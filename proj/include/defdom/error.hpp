#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace defdom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interval properly contains another one. Indices are 1-based input
/// positions, `outer` being the containing interval.
class ProperViolation : public Error {
 public:
  ProperViolation(int outer, int inner)
      : Error("interval " + std::to_string(outer) + " properly contains interval " +
              std::to_string(inner)),
        outer_(outer),
        inner_(inner) {}

  int outer() const { return outer_; }
  int inner() const { return inner_; }

 private:
  int outer_;
  int inner_;
};

class InvalidRanges : public Error {
 public:
  using Error::Error;
};

class InvalidBubbles : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no vertices") {}
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

/// Malformed instance text. `offset` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace defdom
