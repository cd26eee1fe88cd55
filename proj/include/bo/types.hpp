#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bo {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Invalid or unsupported input (CLI maps this to exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical contract was violated at run time (CLI exit code 1).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bo
