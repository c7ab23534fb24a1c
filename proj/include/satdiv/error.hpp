#pragma once

#include <stdexcept>
#include <string>

namespace satdiv {

enum class ErrorKind {
  RowMassExceeded,
  NotTight,
  OutOfRange,
  TauOutOfRange,
  DimensionMismatch,
  ParseError,
  BadParam,
  TooLarge,
  UnknownFixture,
  WrongShape,
  EmptyGraph,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this exception. `row` and
// `column` are 1-based where meaningful, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int row = 0, int column = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        row_(row),
        column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  int row_;
  int column_;
};

}  // namespace satdiv
