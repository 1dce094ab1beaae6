#ifndef QSFD_ERROR_HPP
#define QSFD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsfd {

/// Error categories raised by constructors and generators. Verifiers do not
/// throw on bad input data; they return reports (see report.hpp).
enum class Errc {
  NotSquare,
  SymbolOutOfRange,
  RepeatInRow,
  RepeatInColumn,
  OrderMismatch,
  NotPrime,
  NotPrimePower,
  OrderTooSmall,
  UnsupportedOrder,
  UnknownFixture,
  SpecViolation,
  LabelMismatch,
  NotOrthogonal,
  MalformedArray,
  UnevenClasses,
  CountMismatch,
  IndivisibleGrid,
  ColumnOutOfRange,
  ParseError,
  KindMismatch,
  FileWriteError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qsfd

#endif
