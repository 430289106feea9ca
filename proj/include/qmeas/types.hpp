#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace qmeas {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Deterministic random stream. Never global: every sampling entry point
/// takes one (or a seed) explicitly so parallel call sites can own
/// independent streams.
using Rng = std::mt19937_64;

/// Derives the rng for stream `stream` of a run seeded with `seed`.
/// Distinct streams are independent for any fixed seed, which is what the
/// parallel Monte Carlo paths rely on.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{seed, stream, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  return Rng(seq);
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square operator, incompatible dimensions, bad index.
struct DimensionError : Error {
  using Error::Error;
};

/// Numerical failure: no convergence, radicand out of tolerance, non-finite
/// values.
struct NumericError : Error {
  using Error::Error;
};

/// Violated contract on the data itself: completeness residual too large,
/// matrix not PSD, zero-probability branch, invalid error-channel output.
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed measurement document.
struct ParseError : Error {
  using Error::Error;
};

namespace tol {
// Library-wide defaults; every entry point that checks a tolerance also
// accepts an override.
inline constexpr double reconstruction = 1e-10;
inline constexpr double completeness = 1e-8;
inline constexpr double saturation = 1e-8;
inline constexpr double zero_probability = 1e-14;
inline constexpr double singular_floor = 1e-12;
}  // namespace tol

inline std::string shape_string(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace qmeas
