#pragma once

#include <stdexcept>

namespace zhat {

/// Base of every domain error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ZHAT_DECLARE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

ZHAT_DECLARE_ERROR(SingularMatrix);
ZHAT_DECLARE_ERROR(NotNegativeDefinite);
ZHAT_DECLARE_ERROR(EmptySeries);
ZHAT_DECLARE_ERROR(FormatError);
ZHAT_DECLARE_ERROR(NotATree);
ZHAT_DECLARE_ERROR(NotALeaf);
ZHAT_DECLARE_ERROR(InvalidTriple);
ZHAT_DECLARE_ERROR(ExcludedTriple);
ZHAT_DECLARE_ERROR(InvalidFraction);
ZHAT_DECLARE_ERROR(InvalidSeifertData);
ZHAT_DECLARE_ERROR(InvalidSpinC);

#undef ZHAT_DECLARE_ERROR

}  // namespace zhat
