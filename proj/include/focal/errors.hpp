#pragma once

#include <stdexcept>
#include <string>

namespace focal {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FOCAL_DEFINE_ERROR(Name)             \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// cycle notation / permutations
FOCAL_DEFINE_ERROR(MalformedCycle);
FOCAL_DEFINE_ERROR(PointOutOfRange);
FOCAL_DEFINE_ERROR(RepeatedPoint);
FOCAL_DEFINE_ERROR(DegreeMismatch);

// groups and subgroups
FOCAL_DEFINE_ERROR(OrderCapExceeded);
FOCAL_DEFINE_ERROR(ElementNotInGroup);
FOCAL_DEFINE_ERROR(NotNormal);
FOCAL_DEFINE_ERROR(TrivialGroup);

// arithmetic
FOCAL_DEFINE_ERROR(NotPrime);
FOCAL_DEFINE_ERROR(NotCoprime);

// words
FOCAL_DEFINE_ERROR(SyntaxError);
FOCAL_DEFINE_ERROR(InvalidIndex);
FOCAL_DEFINE_ERROR(ArityMismatch);
FOCAL_DEFINE_ERROR(EnumerationCapExceeded);

// verification
FOCAL_DEFINE_ERROR(TheoremViolated);
FOCAL_DEFINE_ERROR(HypothesisViolated);

// corpus / input
FOCAL_DEFINE_ERROR(ParameterOutOfRange);
FOCAL_DEFINE_ERROR(FileFormatError);

#undef FOCAL_DEFINE_ERROR

}  // namespace focal
