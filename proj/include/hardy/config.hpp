#pragma once

#include <complex>

namespace hardy {

using Complex = std::complex<double>;

/// Numerical tolerances shared by every module.
struct Tolerances
{
  double projective = 1e-10;   ///< projective equality of coefficient quadruples
  double self_map = 1e-9;      ///< allowed excess of sup |phi| over 1 on the circle grid
  int circle_samples = 4096;   ///< circle grid used by the self-map test
  double discriminant = 1e-9;  ///< double-root detection for the contact quadratic
  double unimodular = 1e-9;    ///< |z| = 1 checks
  double coefficient = 1e-12;  ///< coefficient comparisons in the symbol calculus
  double fredholm = 1e-9;      ///< invertibility threshold on the symbol
  double self_adjoint = 1e-8;  ///< hermiticity of truncated matrices
  double translation = 1e-9;   ///< constancy of the parabolic translation number
};

inline constexpr Tolerances default_tolerances{};

} // namespace hardy
