#include "holokrein/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "holokrein/error.hpp"

namespace holokrein {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Gamma(x) for x >= 1/2.
double lanczos(double x) {
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw Error(ErrorCode::DomainError, "Gamma has a pole at nonpositive integers");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  return lanczos(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return std::sin(std::numbers::pi * x) * lanczos(1.0 - x) / std::numbers::pi;
  return 1.0 / lanczos(x);
}

}  // namespace holokrein
