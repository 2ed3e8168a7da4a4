#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace holokrein {

using cplx = std::complex<double>;

/// Power series c_0 + c_1 z + ... + c_D z^D standing in for an entire function.
/// `exact()` turns false as soon as an operation discards nonzero mass beyond z^D.
class TruncFn {
 public:
  explicit TruncFn(int degree_cap);
  TruncFn(std::vector<cplx> coefficients, bool exact = true);

  static TruncFn monomial(int degree_cap, int power, cplx coefficient = 1.0);

  int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool exact() const { return exact_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  cplx operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  cplx& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

  void mark_inexact() { exact_ = false; }

  cplx evaluate(cplx z) const;

  TruncFn& operator+=(const TruncFn& o);
  TruncFn& operator-=(const TruncFn& o);
  TruncFn& operator*=(cplx s);
  friend TruncFn operator+(TruncFn l, const TruncFn& r) { return l += r; }
  friend TruncFn operator-(TruncFn l, const TruncFn& r) { return l -= r; }
  friend TruncFn operator*(cplx s, TruncFn f) { return f *= s; }

 private:
  std::vector<cplx> coeffs_;
  bool exact_ = true;
};

/// Multiplication by z; c_D is pushed past the cap.
TruncFn apply_z(const TruncFn& f);
/// Differentiation d/dz.
TruncFn apply_dz(const TruncFn& f);

/// Cauchy product truncated to the common degree cap.
TruncFn multiply(const TruncFn& f, const TruncFn& g);

/// Truncated series of exp(c z^2).
TruncFn gaussian_series(cplx c, int degree_cap);

/// Implementer of S(alpha, beta) = [[alpha, 0], [beta, 1/alpha]]:
/// f(z) -> f(alpha z) exp(-alpha beta z^2 / 2). Satisfies Gamma_S Z Gamma_S^{-1} = S Z.
TruncFn gamma_S(cplx alpha, cplx beta, const TruncFn& f);

/// max over g in {z, d} of seminorm(S(g) f - Gamma_S g Gamma_S^{-1} f, radius) on
/// coefficients 0..D-2.
double verify_implementation(cplx alpha, cplx beta, const TruncFn& f, double radius = 1.0);

/// exp(-z^2 / (2 s)), the kernel of z + s d/dz.
TruncFn annihilator_beta_minus(cplx s, int degree_cap);

/// sum_n |c_n| R^n, an upper bound for sup_{|z| <= R} |f(z)|.
double seminorm(const TruncFn& f, double radius);
/// Same, restricted to coefficients 0..max_degree.
double seminorm(const TruncFn& f, double radius, int max_degree);

/// One-parameter family s -> U(s) acting on truncated functions.
using OperatorFamily = std::function<TruncFn(double, const TruncFn&)>;

/// Bargmann rotation U(s) f(z) = f(e^{is} z).
OperatorFamily rotation_family();

/// (1/M) sum_j U(2 pi j/M) e^{-i k 2 pi j/M} f, the equispaced discretization of the
/// Fourier projection onto the k-th eigenspace. Requires M >= D + 1.
TruncFn fourier_project(const OperatorFamily& u, const TruncFn& f, int k, int nodes);

/// Default node count 4 (D + 1).
inline int default_fourier_nodes(int degree_cap) { return 4 * (degree_cap + 1); }

}  // namespace holokrein
