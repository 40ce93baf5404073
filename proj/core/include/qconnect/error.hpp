#pragma once

#include <stdexcept>
#include <string>

namespace qconnect {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QCONNECT_DEFINE_ERROR(Name)                               \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QCONNECT_DEFINE_ERROR(DivisionByZero);
QCONNECT_DEFINE_ERROR(PoleAtOne);
QCONNECT_DEFINE_ERROR(LambdaPresent);
QCONNECT_DEFINE_ERROR(NumericPole);
QCONNECT_DEFINE_ERROR(OrderMismatch);
QCONNECT_DEFINE_ERROR(OrderExceeded);
QCONNECT_DEFINE_ERROR(NonzeroConstantTerm);
QCONNECT_DEFINE_ERROR(ConstantTermNotOne);
QCONNECT_DEFINE_ERROR(NonInvertibleConstant);
QCONNECT_DEFINE_ERROR(IndexOutOfRange);
QCONNECT_DEFINE_ERROR(ParseError);

#undef QCONNECT_DEFINE_ERROR

}  // namespace qconnect
