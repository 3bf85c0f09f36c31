#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace racts {

enum class ErrorKind {
  kNonAssociative,
  kShapeMismatch,
  kIndexOutOfRange,
  kNotAGroup,
  kIrregularSandwich,
  kZeroEntryWithoutZeroFlag,
  kIncompatibleAction,
  kSizeLimit,
  kNotASubact,
  kActMismatch,
  kPreconditionViolated,
  kNotARectangularBand,
  kBudgetExceeded,
  kUnknownGroup,
  kParseError,
};

const char* error_kind_name(ErrorKind kind);

// All library failures are reported through this type. `witness` carries up
// to three indices whose meaning depends on the kind (e.g. the triple
// (x, y, z) violating associativity).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  Error(ErrorKind kind, std::string msg, std::array<int, 3> witness)
      : std::runtime_error(std::move(msg)), kind_(kind), witness_(witness) {}

  ErrorKind kind() const { return kind_; }
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::array<int, 3> witness_{-1, -1, -1};
};

}  // namespace racts
