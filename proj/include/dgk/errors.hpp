#pragma once

#include <stdexcept>
#include <string>

namespace dgk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DGK_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

DGK_DEFINE_ERROR(NotComposable);
DGK_DEFINE_ERROR(NotASubgroup);
DGK_DEFINE_ERROR(BaseMismatch);
DGK_DEFINE_ERROR(NotMatching);
DGK_DEFINE_ERROR(NotSlim);
DGK_DEFINE_ERROR(NoFilling);
DGK_DEFINE_ERROR(NotFactorization);
DGK_DEFINE_ERROR(NotAbelian);
DGK_DEFINE_ERROR(CocycleInvalid);
DGK_DEFINE_ERROR(SolveFailed);
DGK_DEFINE_ERROR(NotChained);
DGK_DEFINE_ERROR(InconsistentQuotient);
DGK_DEFINE_ERROR(IncompleteTable);

#undef DGK_DEFINE_ERROR

/// Malformed input: wrong shape, out-of-range index, or a table entry on a
/// pair that cannot compose. `context` names the offending field.
class FormatError : public Error {
 public:
  FormatError(const std::string& context, const std::string& what)
      : Error(context.empty() ? what : context + ": " + what), context_(context) {}
  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace dgk
