#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccf {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// finite-group-engine
class InvalidGroup : public Error { using Error::Error; };
class CapExceeded : public Error { using Error::Error; };
class NotASubgroup : public Error { using Error::Error; };
class NotNormal : public Error { using Error::Error; };
class NotSurjective : public Error { using Error::Error; };
class NotAHomomorphism : public Error { using Error::Error; };
class InvalidTwist : public Error { using Error::Error; };
class SearchBoundExceeded : public Error { using Error::Error; };
class UnknownGroup : public Error { using Error::Error; };

// canonical-formula
class DegenerateValence : public Error { using Error::Error; };
class InadmissibleQuadruple : public Error {
public:
  InadmissibleQuadruple(std::string pair, const std::string& msg)
      : Error(msg), pair_(std::move(pair)) {}
  /// The offending pair, e.g. "(a^-1,y)".
  const std::string& pair() const noexcept { return pair_; }

private:
  std::string pair_;
};

/// An error tied to a location in user-supplied text.
class PositionedError : public Error {
public:
  PositionedError(std::size_t position, const std::string& msg)
      : Error(msg), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// braid words: position is the 1-based token index
class SyntaxError : public PositionedError { using PositionedError::PositionedError; };

// expression language: positions are byte offsets
class LexError : public PositionedError { using PositionedError::PositionedError; };
class ParseError : public PositionedError {
public:
  ParseError(std::size_t position, std::string expected, const std::string& msg)
      : PositionedError(position, msg), expected_(std::move(expected)) {}
  const std::string& expected() const noexcept { return expected_; }

private:
  std::string expected_;
};
class DomainError : public PositionedError { using PositionedError::PositionedError; };
class DivisionByZeroAt : public PositionedError { using PositionedError::PositionedError; };

} // namespace ccf
