#ifndef KRON3D_ERRORS_HPP
#define KRON3D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kron3d {

// Error codes shared with the C API (see include/kron3d.h).
enum class ErrorCode : int {
    ok = 0,
    invalid_argument = 1,
    not_hermitian = 2,
    not_psd = 3,
    no_convergence = 4,
    singular = 5,
    dimension_mismatch = 6,
    null_space_word = 7,
    io = 8,
    internal = 9,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

class InvalidArgumentError : public Error {
  public:
    explicit InvalidArgumentError(const std::string &what) : Error(ErrorCode::invalid_argument, what) {}
};

class NotHermitianError : public Error {
  public:
    explicit NotHermitianError(const std::string &what) : Error(ErrorCode::not_hermitian, what) {}
};

class NotPsdError : public Error {
  public:
    explicit NotPsdError(const std::string &what) : Error(ErrorCode::not_psd, what) {}
};

class NoConvergenceError : public Error {
  public:
    explicit NoConvergenceError(const std::string &what) : Error(ErrorCode::no_convergence, what) {}
};

class SingularError : public Error {
  public:
    explicit SingularError(const std::string &what) : Error(ErrorCode::singular, what) {}
};

class DimensionMismatchError : public Error {
  public:
    explicit DimensionMismatchError(const std::string &what) : Error(ErrorCode::dimension_mismatch, what) {}
};

class NullSpaceWordError : public Error {
  public:
    explicit NullSpaceWordError(const std::string &what) : Error(ErrorCode::null_space_word, what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string &what) : Error(ErrorCode::io, what) {}
};

} // namespace kron3d

#endif
