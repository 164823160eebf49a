#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace wconvex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownPoint : public Error {
 public:
  explicit UnknownPoint(std::size_t index)
      : Error("unknown point index " + std::to_string(index)), index_(index) {}
  explicit UnknownPoint(const std::string& id)
      : Error("unknown point '" + id + "'"), index_(static_cast<std::size_t>(-1)) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class OverlappingExamples : public Error {
 public:
  using Error::Error;
};

/// A distance matrix that fails one of the metric axioms. `points()` names
/// the offending pair (identity, symmetry) or triple (triangle).
class AxiomViolation : public Error {
 public:
  enum class Axiom { identity, symmetry, triangle, non_finite };

  AxiomViolation(Axiom axiom, std::array<std::size_t, 3> points, const std::string& what)
      : Error(what), axiom_(axiom), points_(points) {}

  Axiom axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& points() const noexcept { return points_; }

 private:
  Axiom axiom_;
  std::array<std::size_t, 3> points_;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeight : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class TargetGenerationFailed : public Error {
 public:
  using Error::Error;
};

class EmptyEvalSet : public Error {
 public:
  using Error::Error;
};

/// Input text that cannot be parsed; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wconvex
