#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trs {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct ZeroGradient : Error {
  using Error::Error;
};
struct AlreadyBrokenDown : Error {
  using Error::Error;
};
struct InvalidInterval : Error {
  using Error::Error;
};
struct AsymmetricMatrix : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotBoundaryCase : Error {
  using Error::Error;
};
struct DenseTooLarge : Error {
  using Error::Error;
};
struct MaxSecularIterations : Error {
  using Error::Error;
};

// Malformed input file; carries 1-based line number when known.
struct ParseError : Error {
  ParseError(const std::string& msg, long line = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_number(line) {}
  long line_number;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace trs
