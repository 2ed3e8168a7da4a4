#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "holokrein/exact.hpp"

namespace holokrein {

/// 2x2 matrix over either exact Q(i, sqrt2) or double-precision complex entries.
/// Entries are row-major: (0,0), (0,1), (1,0), (1,1).
template <typename T>
struct Mat2 {
  std::array<T, 4> e{};

  Mat2() = default;
  Mat2(T a00, T a01, T a10, T a11) : e{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  const T& operator()(int r, int c) const { return e[2 * r + c]; }
  T& operator()(int r, int c) { return e[2 * r + c]; }

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T det() const { return e[0] * e[3] - e[1] * e[2]; }
  T trace() const { return e[0] + e[3]; }

  Mat2 inverse() const {
    const T inv_det = T(1) / det();
    return {e[3] * inv_det, -e[1] * inv_det, -e[2] * inv_det, e[0] * inv_det};
  }

  /// Entrywise complex conjugate (the bar operation, not the adjoint).
  Mat2 conj() const {
    using Tr = ScalarTraits<T>;
    return {Tr::conj(e[0]), Tr::conj(e[1]), Tr::conj(e[2]), Tr::conj(e[3])};
  }

  Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.e[0] * r.e[0] + l.e[1] * r.e[2], l.e[0] * r.e[1] + l.e[1] * r.e[3],
            l.e[2] * r.e[0] + l.e[3] * r.e[2], l.e[2] * r.e[1] + l.e[3] * r.e[3]};
  }
  friend Mat2 operator+(const Mat2& l, const Mat2& r) {
    return {l.e[0] + r.e[0], l.e[1] + r.e[1], l.e[2] + r.e[2], l.e[3] + r.e[3]};
  }
  friend Mat2 operator-(const Mat2& l, const Mat2& r) {
    return {l.e[0] - r.e[0], l.e[1] - r.e[1], l.e[2] - r.e[2], l.e[3] - r.e[3]};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) {
    return {s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]};
  }
  friend bool operator==(const Mat2& l, const Mat2& r) { return l.e == r.e; }
};

using CMat2 = Mat2<std::complex<double>>;
using ExactMat2 = Mat2<ExactComplex>;

inline CMat2 to_complex(const ExactMat2& m) {
  return {m.e[0].to_complex(), m.e[1].to_complex(), m.e[2].to_complex(), m.e[3].to_complex()};
}

/// Max-entry norm, used for every tolerance comparison of 2x2 matrices.
inline double max_abs(const CMat2& m) {
  double out = 0.0;
  for (const auto& x : m.e) out = std::max(out, std::abs(x));
  return out;
}

namespace pauli {

template <typename T>
Mat2<T> sigma1() { return {T(0), T(1), T(1), T(0)}; }

template <typename T>
Mat2<T> sigma3() { return {T(1), T(0), T(0), T(-1)}; }

inline ExactMat2 sigma2_exact() {
  const ExactComplex i = ExactComplex::i();
  return {ExactComplex(0), -i, i, ExactComplex(0)};
}
inline CMat2 sigma2() { return to_complex(sigma2_exact()); }

/// sigma_+ = (sigma1 + i sigma2)/2, upper triangular.
template <typename T>
Mat2<T> sigma_plus() { return {T(0), T(1), T(0), T(0)}; }

template <typename T>
Mat2<T> sigma_minus() { return {T(0), T(0), T(1), T(0)}; }

}  // namespace pauli

/// The matrix V of the Schroedinger realization a* = (z - d)/sqrt2, a = (z + d)/sqrt2.
inline ExactMat2 schroedinger_matrix_exact() {
  const ExactComplex h = ExactComplex(0, Rational(1, 2), 0, 0);  // 1/sqrt2
  return {h, -h, h, h};
}
inline CMat2 schroedinger_matrix() { return to_complex(schroedinger_matrix_exact()); }

/// S(alpha, beta) = [[alpha, 0], [beta, 1/alpha]], the subgroup implementable on entire functions.
inline CMat2 s_matrix(std::complex<double> alpha, std::complex<double> beta) {
  return {alpha, 0.0, beta, 1.0 / alpha};
}

}  // namespace holokrein
