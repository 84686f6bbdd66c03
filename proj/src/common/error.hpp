#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

// Numeric values are mirrored by sb_status in the public C header.
enum class ErrorCode : int {
  Domain = 1,
  Divergence = 2,
  Convergence = 3,
  OutOfClass = 4,
  Bracket = 5,
  InvalidArgument = 6,
  Io = 7,
  Vacuous = 8,
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
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};

// ||V^-||_s is infinite (support or origin singularity not integrable).
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& w)
      : Error(ErrorCode::Divergence, w) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& w)
      : Error(ErrorCode::Convergence, w) {}
};

// No admissible exponent gives a finite negative-part norm.
struct OutOfClassError : Error {
  explicit OutOfClassError(const std::string& w)
      : Error(ErrorCode::OutOfClass, w) {}
};

struct BracketError : Error {
  explicit BracketError(const std::string& w) : Error(ErrorCode::Bracket, w) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w)
      : Error(ErrorCode::InvalidArgument, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

struct VacuousBound : Error {
  explicit VacuousBound(const std::string& w) : Error(ErrorCode::Vacuous, w) {}
};

}  // namespace salpeter
