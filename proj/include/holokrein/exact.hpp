#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace holokrein {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the field Q(i, sqrt2), stored as (re0 + re1*sqrt2) + i*(im0 + im1*sqrt2).
///
/// Large enough to carry the Schroedinger isomorphism (entries 1/sqrt2) with zero
/// rounding, so algebraic identities can be asserted by equality.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long long n) : re0_(n) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(const Rational& r) : re0_(r) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re0, Rational re1, Rational im0, Rational im1)
      : re0_(std::move(re0)), re1_(std::move(re1)), im0_(std::move(im0)), im1_(std::move(im1)) {}

  static ExactComplex i() { return {0, 0, 1, 0}; }
  static ExactComplex sqrt2() { return {0, 1, 0, 0}; }
  static ExactComplex rational(long long num, long long den) { return Rational(num, den); }
  static ExactComplex gaussian(const Rational& re, const Rational& im) { return {re, 0, im, 0}; }

  const Rational& re0() const { return re0_; }
  const Rational& re1() const { return re1_; }
  const Rational& im0() const { return im0_; }
  const Rational& im1() const { return im1_; }

  bool is_zero() const { return re0_ == 0 && re1_ == 0 && im0_ == 0 && im1_ == 0; }
  bool is_rational() const { return re1_ == 0 && im0_ == 0 && im1_ == 0; }

  ExactComplex conj() const { return {re0_, re1_, -im0_, -im1_}; }
  ExactComplex inverse() const;

  std::complex<double> to_complex() const;

  /// Rendering in the expression-DSL number syntax, e.g. "1/2", "3 i", "(1 + 1/2 sqrt2 i)".
  /// `needs_group` is set when the text is a sum and must be parenthesised as a factor.
  std::string str(bool* needs_group = nullptr) const;

  ExactComplex operator-() const { return {-re0_, -re1_, -im0_, -im1_}; }
  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o) { return *this *= o.inverse(); }

  friend ExactComplex operator+(ExactComplex l, const ExactComplex& r) { return l += r; }
  friend ExactComplex operator-(ExactComplex l, const ExactComplex& r) { return l -= r; }
  friend ExactComplex operator*(ExactComplex l, const ExactComplex& r) { return l *= r; }
  friend ExactComplex operator/(ExactComplex l, const ExactComplex& r) { return l /= r; }
  friend bool operator==(const ExactComplex& l, const ExactComplex& r) {
    return l.re0_ == r.re0_ && l.re1_ == r.re1_ && l.im0_ == r.im0_ && l.im1_ == r.im1_;
  }
  friend bool operator!=(const ExactComplex& l, const ExactComplex& r) { return !(l == r); }

 private:
  Rational re0_{0}, re1_{0}, im0_{0}, im1_{0};
};

/// Uniform scalar interface used by the templated algebra and matrix code.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
  static bool is_zero(const ExactComplex& x) { return x.is_zero(); }
  static ExactComplex conj(const ExactComplex& x) { return x.conj(); }
  static std::complex<double> to_complex(const ExactComplex& x) { return x.to_complex(); }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex from_int(long long n) { return ExactComplex(n); }
  static double magnitude(const ExactComplex& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
  static std::complex<double> one() { return 1.0; }
  static std::complex<double> from_int(long long n) { return static_cast<double>(n); }
  static double magnitude(const std::complex<double>& x) { return std::abs(x); }
};

}  // namespace holokrein
