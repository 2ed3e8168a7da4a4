#include "holokrein/pcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holokrein/error.hpp"
#include "holokrein/special.hpp"

namespace holokrein {

namespace {

using lcplx = std::complex<long double>;

constexpr int kMaxTerms = 400;
constexpr long double kRelStop = 1e-16L;

// M(a, b, u), dM/du, d2M/du2 summed term by term, with the sum of absolute term
// magnitudes (for the rounding bound) and a tail bound.
struct KummerSums {
  lcplx m, dm, d2m;
  long double abs_m = 0, abs_dm = 0, abs_d2m = 0;
  long double tail = 0;
};

KummerSums kummer(long double a, long double b, lcplx u) {
  KummerSums out;
  lcplx term = 1.0L;  // (a)_k / (b)_k u^k / k!
  lcplx coeff = 1.0L;  // (a)_k / (b)_k / k!
  lcplx u_pow_km1 = 0.0L, u_pow_km2 = 0.0L;  // u^{k-1}, u^{k-2}
  lcplx u_pow_k = 1.0L;
  for (int k = 0; k < kMaxTerms; ++k) {
    out.m += term;
    out.abs_m += std::abs(term);
    if (k >= 1) {
      const lcplx t = static_cast<long double>(k) * coeff * u_pow_km1;
      out.dm += t;
      out.abs_dm += std::abs(t);
    }
    if (k >= 2) {
      const lcplx t = static_cast<long double>(k) * static_cast<long double>(k - 1) * coeff * u_pow_km2;
      out.d2m += t;
      out.abs_d2m += std::abs(t);
    }
    const long double ak = a + k;
    if (ak == 0.0L) {  // terminating series
      out.tail = 0;
      return out;
    }
    coeff *= ak / ((b + k) * static_cast<long double>(k + 1));
    u_pow_km2 = u_pow_km1;
    u_pow_km1 = u_pow_k;
    u_pow_k *= u;
    const lcplx next = coeff * u_pow_k;
    // The next derivative terms carry lower powers of u and can be nonzero when u^{k+1} is not.
    const long double k1 = static_cast<long double>(k + 1);
    const long double next_all = std::abs(next) + std::abs(coeff) * (k1 * std::abs(u_pow_km1) +
                                                                     k1 * k * std::abs(u_pow_km2));
    // Once the term ratio is below 1/2 the remaining tail is bounded by twice the next term,
    // with two extra powers of k for the second derivative.
    const long double ratio = std::abs(ak) * std::abs(u) / (std::abs(b + k) * (k + 1));
    const long double kk = static_cast<long double>(k + 2);
    if (ratio < 0.5L && next_all * kk * kk <= kRelStop * std::max<long double>(std::abs(out.m), 1e-300L)) {
      out.tail = 2.0L * std::abs(next) * kk * kk;
      return out;
    }
    term = next;
  }
  out.tail = std::abs(term);
  return out;
}

}  // namespace

PcfValue weber_D(double lambda, cplx x) {
  if (!(std::abs(lambda) <= kPcfMaxOrder) || !(std::abs(x) <= kPcfMaxArgument)) {
    throw Error(ErrorCode::DomainError, "parabolic cylinder evaluation outside |lambda| <= 20, |x| <= 12");
  }
  const long double lam = lambda;
  const lcplx xl(x.real(), x.imag());
  const lcplx u = xl * xl / 2.0L;

  const long double sqrt_pi = std::sqrt(std::numbers::pi_v<long double>);
  const long double a_coef = sqrt_pi * rgamma(static_cast<double>((1.0L - lam) / 2.0L));
  const long double b_coef = std::sqrt(2.0L) * sqrt_pi * rgamma(static_cast<double>(-lam / 2.0L));

  const KummerSums m1 = kummer(-lam / 2.0L, 0.5L, u);
  const KummerSums m2 = kummer((1.0L - lam) / 2.0L, 1.5L, u);

  // D = 2^{lam/2} E(x) P(x), E = exp(-x^2/4), P = A M1(u) - B x M2(u), u = x^2/2
  const lcplx p = a_coef * m1.m - b_coef * xl * m2.m;
  const lcplx dp = a_coef * xl * m1.dm - b_coef * (m2.m + xl * xl * m2.dm);
  const lcplx d2p = a_coef * (m1.dm + xl * xl * m1.d2m) -
                    b_coef * (3.0L * xl * m2.dm + xl * xl * xl * m2.d2m);

  const lcplx e = std::exp(-xl * xl / 4.0L);
  const lcplx de = -xl / 2.0L * e;
  const lcplx d2e = (xl * xl / 4.0L - 0.5L) * e;
  const long double pref = std::pow(2.0L, lam / 2.0L);

  const lcplx value = pref * e * p;
  const lcplx deriv = pref * (de * p + e * dp);
  const lcplx second = pref * (d2e * p + 2.0L * de * dp + e * d2p);

  const long double ax = std::abs(xl);
  const long double abs_sum = std::abs(a_coef) * m1.abs_m + std::abs(b_coef) * ax * m2.abs_m;
  const long double tail = std::abs(a_coef) * m1.tail + std::abs(b_coef) * ax * m2.tail;
  // The reciprocal-Gamma prefactors are double precision, so rounding is dominated by
  // eps_double times the absolute series mass (the two terms cancel for large x).
  const long double rounding = 8.0L * std::numeric_limits<double>::epsilon() * abs_sum;
  const long double err = pref * std::abs(e) * (tail + rounding);

  return PcfValue{lambda,
                  x,
                  cplx(static_cast<double>(value.real()), static_cast<double>(value.imag())),
                  cplx(static_cast<double>(deriv.real()), static_cast<double>(deriv.imag())),
                  cplx(static_cast<double>(second.real()), static_cast<double>(second.imag())),
                  static_cast<double>(err)};
}

LadderFunction ladder_function(double lambda, cplx z) {
  const double r2 = std::numbers::sqrt2;
  const PcfValue d = weber_D(lambda, r2 * z);
  return {d.value, r2 * d.derivative};
}

LadderResiduals ladder_check(double lambda, std::span<const double> grid) {
  const double r2 = std::numbers::sqrt2;
  LadderResiduals out{0.0, 0.0};
  for (double z : grid) {
    const LadderFunction f = ladder_function(lambda, z);
    const cplx up = (cplx(z) * f.value - f.derivative) / r2 - ladder_function(lambda + 1.0, z).value;
    const cplx down_target = lambda == 0.0 ? cplx{} : lambda * ladder_function(lambda - 1.0, z).value;
    const cplx down = (cplx(z) * f.value + f.derivative) / r2 - down_target;
    out.up = std::max(out.up, std::abs(up));
    out.down = std::max(out.down, std::abs(down));
  }
  return out;
}

double weber_ode_residual(double lambda, cplx x) {
  const PcfValue d = weber_D(lambda, x);
  return std::abs(d.second_derivative + (lambda + 0.5 - x * x / 4.0) * d.value);
}

}  // namespace holokrein
