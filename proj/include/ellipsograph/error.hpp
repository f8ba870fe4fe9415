#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ellipsograph {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant or an operation precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration ran out of iterations (or diverged to non-finite values).
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double g1, double g2, int iterations,
                 std::optional<double> theta = std::nullopt)
      : Error(what), g1_(g1), g2_(g2), iterations_(iterations), theta_(theta) {}

  double rod_length_residual() const noexcept { return g1_; }
  double direction_residual() const noexcept { return g2_; }
  int iterations() const noexcept { return iterations_; }
  /// Driving angle of the failing solve, when raised from a sweep.
  std::optional<double> theta() const noexcept { return theta_; }

 private:
  double g1_;
  double g2_;
  int iterations_;
  std::optional<double> theta_;
};

class SingularJacobian : public Error {
 public:
  SingularJacobian(const std::string& what, double determinant,
                   std::optional<double> theta = std::nullopt)
      : Error(what), determinant_(determinant), theta_(theta) {}

  double determinant() const noexcept { return determinant_; }
  std::optional<double> theta() const noexcept { return theta_; }

 private:
  double determinant_;
  std::optional<double> theta_;
};

/// A trace point lands outside the printable area of the page.
class OutOfPage : public Error {
 public:
  OutOfPage(const std::string& what, double theta) : Error(what), theta_(theta) {}
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

enum class CatalogErrorKind { MalformedRow, DuplicatePart, NegativeValue };

class CatalogError : public ValidationError {
 public:
  CatalogError(CatalogErrorKind kind, std::size_t line, const std::string& detail)
      : ValidationError(describe(kind, line, detail)), kind_(kind), line_(line) {}

  CatalogErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number in the catalog text.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string describe(CatalogErrorKind kind, std::size_t line,
                              const std::string& detail) {
    const char* name = kind == CatalogErrorKind::MalformedRow    ? "malformed row"
                       : kind == CatalogErrorKind::DuplicatePart ? "duplicate part"
                                                                 : "negative value";
    return std::string(name) + " at line " + std::to_string(line) + ": " + detail;
  }

  CatalogErrorKind kind_;
  std::size_t line_;
};

}  // namespace ellipsograph
