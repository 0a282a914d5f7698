#ifndef SUPERKIT_ERRORS_HPP
#define SUPERKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERKIT_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

SUPERKIT_DEFINE_ERROR(DimensionMismatch);
SUPERKIT_DEFINE_ERROR(ParseError);
SUPERKIT_DEFINE_ERROR(MissingFaithfulRep);
SUPERKIT_DEFINE_ERROR(NotOdd);
SUPERKIT_DEFINE_ERROR(NotEven);
SUPERKIT_DEFINE_ERROR(NotSemisimpleStructure);
SUPERKIT_DEFINE_ERROR(NonSemisimpleCartanAction);
SUPERKIT_DEFINE_ERROR(CartanSearchFailed);
SUPERKIT_DEFINE_ERROR(NotInG1ss);
SUPERKIT_DEFINE_ERROR(Vanishing);
SUPERKIT_DEFINE_ERROR(NonSemisimpleSquare);
SUPERKIT_DEFINE_ERROR(InvalidArgument);

#undef SUPERKIT_DEFINE_ERROR

}  // namespace superkit

#endif  // SUPERKIT_ERRORS_HPP
