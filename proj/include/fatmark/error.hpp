#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fatmark {

enum class ErrorKind {
  // algebra
  kRankMismatch,
  kOverflow,
  kInvalidArgument,
  // fatgraph structure
  kMissingHalfEdge,
  kDuplicateHalfEdge,
  kDuplicateLabel,
  kDisconnected,
  kValence,
  kMultipleUnivalent,
  kBadTail,
  kCorruptTopology,
  kBoundaryNumber,
  // flips
  kTailFlip,
  kLoopFlip,
  kNotTrivalent,
  kEdgeRelation,
  kPathStep,
  kNotClosed,
  // markings
  kInversion,
  kCoherence,
  kSurjectivity,
  kMarkingShape,
  kGenus,
  kPairing,
  // cocycles
  kNoInducedAutomorphism,
  kNotInvertible,
  kCocycleMismatch,
  // words
  kUnknownGenerator,
  kIndexRange,
  kMissingImage,
  kNotHomomorphism,
  // io
  kParse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A flip path failed; `cause()` is the kind raised by the failing step.
class PathError : public Error {
 public:
  PathError(std::size_t step, ErrorKind cause, const std::string& message)
      : Error(ErrorKind::kPathStep,
              "step " + std::to_string(step) + ": " + message),
        step_(step),
        cause_(cause) {}

  std::size_t step() const { return step_; }
  ErrorKind cause() const { return cause_; }

 private:
  std::size_t step_;
  ErrorKind cause_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in multiplication");
  }
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked
}  // namespace fatmark
