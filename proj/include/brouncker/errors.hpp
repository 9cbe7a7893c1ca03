#ifndef BRK_ERRORS_HPP
#define BRK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brouncker {

// Stable numeric codes, mirrored by the C API in brouncker.h.
enum class ErrorCode : int {
  Ok = 0,
  DomainError = 1,
  NonPositiveElement = 2,
  DivisionByZeroDenominator = 3,
  ZeroParameter = 4,
  NotConverged = 5,
  QuadratureFailure = 6,
  MonotonicityViolated = 7,
  InvalidArgument = 8,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::DomainError, what) {}
};
struct NonPositiveElement : Error {
  explicit NonPositiveElement(const std::string& what)
      : Error(ErrorCode::NonPositiveElement, what) {}
};
struct DivisionByZeroDenominator : Error {
  explicit DivisionByZeroDenominator(const std::string& what)
      : Error(ErrorCode::DivisionByZeroDenominator, what) {}
};
struct ZeroParameter : Error {
  explicit ZeroParameter(const std::string& what) : Error(ErrorCode::ZeroParameter, what) {}
};
struct NotConverged : Error {
  explicit NotConverged(const std::string& what) : Error(ErrorCode::NotConverged, what) {}
};
struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& what)
      : Error(ErrorCode::QuadratureFailure, what) {}
};
struct MonotonicityViolated : Error {
  explicit MonotonicityViolated(const std::string& what)
      : Error(ErrorCode::MonotonicityViolated, what) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

}  // namespace brouncker

#endif
