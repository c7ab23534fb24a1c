#include "satdiv/error.hpp"

namespace satdiv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RowMassExceeded: return "RowMassExceeded";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::TauOutOfRange: return "TauOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
  }
  return "Error";
}

}  // namespace satdiv
