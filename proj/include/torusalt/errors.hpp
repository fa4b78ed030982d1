#pragma once

#include <stdexcept>
#include <string>

namespace torusalt {

// Every failure raised by the library derives from Error so callers can
// catch the family at once and still discriminate on the concrete type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TORUSALT_ERROR(Name)                                   \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

TORUSALT_ERROR(NotDivisible);
TORUSALT_ERROR(NotNormalizable);
TORUSALT_ERROR(IndexOutOfRange);
TORUSALT_ERROR(StrandMismatch);
TORUSALT_ERROR(MultiComponent);
TORUSALT_ERROR(TooLarge);
TORUSALT_ERROR(NotStaircaseForm);
TORUSALT_ERROR(InvalidArgument);
TORUSALT_ERROR(ParseError);
TORUSALT_ERROR(ConstructionFailed);

#undef TORUSALT_ERROR

}  // namespace torusalt
