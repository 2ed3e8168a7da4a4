#pragma once

#include <complex>
#include <span>

namespace holokrein {

using cplx = std::complex<double>;

/// Validity window of the series evaluation.
inline constexpr double kPcfMaxOrder = 20.0;
inline constexpr double kPcfMaxArgument = 12.0;

struct PcfValue {
  double lambda;
  cplx x;
  cplx value;
  cplx derivative;
  cplx second_derivative;
  /// Bound on series truncation plus accumulated rounding.
  double error_estimate;
};

/// Parabolic cylinder function D_lambda(x) (the solution decaying at +infinity) from its
/// Kummer-series decomposition, with derivatives by term-wise differentiation.
PcfValue weber_D(double lambda, cplx x);

/// F_lambda(z) = D_lambda(sqrt2 z) and its z-derivative.
struct LadderFunction {
  cplx value;
  cplx derivative;
};
LadderFunction ladder_function(double lambda, cplx z);

struct LadderResiduals {
  double up;
  double down;
};

/// Max over the grid of |(z - d/dz) F_lambda / sqrt2 - F_{lambda+1}| and
/// |(z + d/dz) F_lambda / sqrt2 - lambda F_{lambda-1}|.
LadderResiduals ladder_check(double lambda, std::span<const double> grid);

/// |D'' + (lambda + 1/2 - x^2/4) D| at x.
double weber_ode_residual(double lambda, cplx x);

}  // namespace holokrein
