#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lieclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of the operands do not fit together.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An object violates one of its structural invariants (Jacobi, exactness, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A value that must lie in the image of the kernel inclusion does not.
class ExactnessViolation : public Error {
public:
  using Error::Error;
};

/// A symmetric map fails the invariance condition required by an operation.
class NotInvariant : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class InvalidSection : public Error {
public:
  using Error::Error;
};

/// Requested degree combination is impossible (e.g. more sections than slots).
class DegreeError : public Error {
public:
  using Error::Error;
};

class NotACocycle : public Error {
public:
  using Error::Error;
};

/// A cochain that must be closed is not; signals invariance violation or corrupted data.
class NotClosed : public Error {
public:
  using Error::Error;
};

/// f_sigma does not vanish for one of the sections of a secondary class.
class NotAdmissible : public Error {
public:
  using Error::Error;
};

/// Outcome of a structural check: empty means the check passed.
struct ValidationReport {
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  void fail(std::string message) { failures.push_back(std::move(message)); }
  [[nodiscard]] std::string summary() const {
    std::string out;
    for (const auto& f : failures) {
      if (!out.empty()) out += "; ";
      out += f;
    }
    return out;
  }
};

}  // namespace lieclass
