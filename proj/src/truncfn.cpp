#include "holokrein/truncfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holokrein/error.hpp"

namespace holokrein {

TruncFn::TruncFn(int degree_cap) {
  if (degree_cap < 0) throw Error(ErrorCode::InvalidArgument, "degree cap must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(degree_cap) + 1, cplx{});
}

TruncFn::TruncFn(std::vector<cplx> coefficients, bool exact) : coeffs_(std::move(coefficients)), exact_(exact) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a truncated function needs at least c_0");
}

TruncFn TruncFn::monomial(int degree_cap, int power, cplx coefficient) {
  TruncFn out(degree_cap);
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  if (power > degree_cap) {
    out.exact_ = false;
  } else {
    out[power] = coefficient;
  }
  return out;
}

cplx TruncFn::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TruncFn& TruncFn::operator+=(const TruncFn& o) {
  if (o.degree_cap() != degree_cap()) throw Error(ErrorCode::InvalidArgument, "degree caps differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  exact_ = exact_ && o.exact_;
  return *this;
}

TruncFn& TruncFn::operator-=(const TruncFn& o) {
  if (o.degree_cap() != degree_cap()) throw Error(ErrorCode::InvalidArgument, "degree caps differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  exact_ = exact_ && o.exact_;
  return *this;
}

TruncFn& TruncFn::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncFn apply_z(const TruncFn& f) {
  const int d = f.degree_cap();
  TruncFn out(d);
  for (int n = d; n >= 1; --n) out[n] = f[n - 1];
  if (!f.exact() || f[d] != cplx{}) out.mark_inexact();
  return out;
}

TruncFn apply_dz(const TruncFn& f) {
  const int d = f.degree_cap();
  TruncFn out(d);
  for (int n = 0; n < d; ++n) out[n] = static_cast<double>(n + 1) * f[n + 1];
  if (!f.exact()) out.mark_inexact();
  return out;
}

TruncFn multiply(const TruncFn& f, const TruncFn& g) {
  const int d = std::min(f.degree_cap(), g.degree_cap());
  TruncFn out(d);
  bool dropped = false;
  for (int m = 0; m <= f.degree_cap(); ++m) {
    if (f[m] == cplx{}) continue;
    for (int n = 0; n <= g.degree_cap(); ++n) {
      if (g[n] == cplx{}) continue;
      if (m + n <= d) {
        out[m + n] += f[m] * g[n];
      } else {
        dropped = true;
      }
    }
  }
  if (dropped || !f.exact() || !g.exact()) out.mark_inexact();
  return out;
}

TruncFn gaussian_series(cplx c, int degree_cap) {
  TruncFn out(degree_cap);
  cplx term = 1.0;
  for (int k = 0; 2 * k <= degree_cap; ++k) {
    out[2 * k] = term;
    term *= c / static_cast<double>(k + 1);
  }
  if (c != cplx{}) out.mark_inexact();
  return out;
}

TruncFn gamma_S(cplx alpha, cplx beta, const TruncFn& f) {
  if (alpha == cplx{}) throw Error(ErrorCode::SingularTransformation, "alpha must be nonzero");
  const int d = f.degree_cap();
  TruncFn scaled(d);
  cplx p = 1.0;
  for (int n = 0; n <= d; ++n) {
    scaled[n] = f[n] * p;
    p *= alpha;
  }
  if (!f.exact()) scaled.mark_inexact();
  if (beta == cplx{}) return scaled;
  return multiply(scaled, gaussian_series(-alpha * beta / 2.0, d));
}

double seminorm(const TruncFn& f, double radius) { return seminorm(f, radius, f.degree_cap()); }

double seminorm(const TruncFn& f, double radius, int max_degree) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "seminorm radius must be positive");
  double acc = 0.0, rn = 1.0;
  const int top = std::min(max_degree, f.degree_cap());
  for (int n = 0; n <= top; ++n) {
    acc += std::abs(f[n]) * rn;
    rn *= radius;
  }
  return acc;
}

double verify_implementation(cplx alpha, cplx beta, const TruncFn& f, double radius) {
  if (alpha == cplx{}) throw Error(ErrorCode::SingularTransformation, "alpha must be nonzero");
  const int compared = f.degree_cap() - 2;
  if (compared < 0) throw Error(ErrorCode::InvalidArgument, "degree cap too small to compare");

  // S^{-1} = S(1/alpha, -beta)
  const TruncFn pulled = gamma_S(1.0 / alpha, -beta, f);
  // sigma(z) = alpha z, sigma(d) = beta z + d / alpha
  const TruncFn lhs_z = alpha * apply_z(f);
  const TruncFn lhs_d = beta * apply_z(f) + (1.0 / alpha) * apply_dz(f);
  const TruncFn rhs_z = gamma_S(alpha, beta, apply_z(pulled));
  const TruncFn rhs_d = gamma_S(alpha, beta, apply_dz(pulled));
  return std::max(seminorm(lhs_z - rhs_z, radius, compared), seminorm(lhs_d - rhs_d, radius, compared));
}

TruncFn annihilator_beta_minus(cplx s, int degree_cap) {
  if (s == cplx{}) throw Error(ErrorCode::SingularTransformation, "s must be nonzero");
  return gaussian_series(-1.0 / (2.0 * s), degree_cap);
}

OperatorFamily rotation_family() {
  return [](double s, const TruncFn& f) { return gamma_S(std::polar(1.0, s), 0.0, f); };
}

TruncFn fourier_project(const OperatorFamily& u, const TruncFn& f, int k, int nodes) {
  if (nodes < f.degree_cap() + 1) {
    throw Error(ErrorCode::AliasingRisk, "node count must be at least degree cap + 1");
  }
  TruncFn acc(f.degree_cap());
  for (int j = 0; j < nodes; ++j) {
    const double s = 2.0 * std::numbers::pi * j / nodes;
    acc += std::polar(1.0, -static_cast<double>(k) * s) * u(s, f);
  }
  acc *= 1.0 / nodes;
  return acc;
}

}  // namespace holokrein
