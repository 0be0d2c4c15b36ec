#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition of the operation (wrong degree, mixed rings, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but degenerate for the construction: a net that is not
/// general, a cone where a smooth cubic is needed, a zero determinant, ...
/// `stage` names the step of a multi-stage computation that detected it.
class DegenerateInput : public Error {
 public:
  DegenerateInput(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Syntax error in the polynomial grammar; `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fano
