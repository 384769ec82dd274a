#pragma once

#include <stdexcept>
#include <string>

namespace rbalg {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RBALG_DEFINE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

RBALG_DEFINE_ERROR(ZeroDivision);
RBALG_DEFINE_ERROR(FieldMismatch);
RBALG_DEFINE_ERROR(EvalSingular);
RBALG_DEFINE_ERROR(IncompleteAssignment);
RBALG_DEFINE_ERROR(DimensionMismatch);
RBALG_DEFINE_ERROR(InputAxiomsFail);
RBALG_DEFINE_ERROR(TwistHypothesisViolated);
RBALG_DEFINE_ERROR(HypothesisViolated);
RBALG_DEFINE_ERROR(NonzeroWeight);
RBALG_DEFINE_ERROR(InvalidArity);
RBALG_DEFINE_ERROR(Indecomposable);
RBALG_DEFINE_ERROR(WrongAugmentation);
RBALG_DEFINE_ERROR(KindMismatch);
RBALG_DEFINE_ERROR(BoundsExceeded);
RBALG_DEFINE_ERROR(BudgetExceeded);
RBALG_DEFINE_ERROR(BasisMismatch);
RBALG_DEFINE_ERROR(InvalidField);
RBALG_DEFINE_ERROR(UnknownFamily);

#undef RBALG_DEFINE_ERROR

// Literal or document syntax error; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rbalg
