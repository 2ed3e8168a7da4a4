#include "holokrein/exact.hpp"

#include <cmath>
#include <vector>

#include "holokrein/error.hpp"

namespace holokrein {

namespace {

// (p + q sqrt2)(r + s sqrt2)
void mul_sqrt2(const Rational& p, const Rational& q, const Rational& r, const Rational& s,
               Rational& out0, Rational& out1) {
  out0 = p * r + 2 * q * s;
  out1 = p * s + q * r;
}

std::string rational_str(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re0_ += o.re0_;
  re1_ += o.re1_;
  im0_ += o.im0_;
  im1_ += o.im1_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re0_ -= o.re0_;
  re1_ -= o.re1_;
  im0_ -= o.im0_;
  im1_ -= o.im1_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  // (A + iB)(C + iD) with A..D in Q(sqrt2)
  Rational ac0, ac1, bd0, bd1, ad0, ad1, bc0, bc1;
  mul_sqrt2(re0_, re1_, o.re0_, o.re1_, ac0, ac1);
  mul_sqrt2(im0_, im1_, o.im0_, o.im1_, bd0, bd1);
  mul_sqrt2(re0_, re1_, o.im0_, o.im1_, ad0, ad1);
  mul_sqrt2(im0_, im1_, o.re0_, o.re1_, bc0, bc1);
  re0_ = ac0 - bd0;
  re1_ = ac1 - bd1;
  im0_ = ad0 + bc0;
  im1_ = ad1 + bc1;
  return *this;
}

ExactComplex ExactComplex::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DomainError, "division by zero in Q(i, sqrt2)");
  // 1/(A + iB) = (A - iB) / (A^2 + B^2); then invert n0 + n1 sqrt2 via its conjugate.
  Rational a2_0, a2_1, b2_0, b2_1;
  mul_sqrt2(re0_, re1_, re0_, re1_, a2_0, a2_1);
  mul_sqrt2(im0_, im1_, im0_, im1_, b2_0, b2_1);
  const Rational n0 = a2_0 + b2_0;
  const Rational n1 = a2_1 + b2_1;
  const Rational norm = n0 * n0 - 2 * n1 * n1;
  const ExactComplex inv_n(n0 / norm, -n1 / norm, 0, 0);
  return conj() * inv_n;
}

std::complex<double> ExactComplex::to_complex() const {
  const double s2 = std::sqrt(2.0);
  return {static_cast<double>(re0_) + static_cast<double>(re1_) * s2,
          static_cast<double>(im0_) + static_cast<double>(im1_) * s2};
}

std::string ExactComplex::str(bool* needs_group) const {
  std::vector<std::pair<Rational, const char*>> parts;
  if (re0_ != 0) parts.emplace_back(re0_, "");
  if (re1_ != 0) parts.emplace_back(re1_, "sqrt2");
  if (im0_ != 0) parts.emplace_back(im0_, "i");
  if (im1_ != 0) parts.emplace_back(im1_, "sqrt2 i");
  if (needs_group) *needs_group = parts.size() > 1;
  if (parts.empty()) return "0";

  std::string out;
  bool first = true;
  for (const auto& [value, unit] : parts) {
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string unit_str(unit);
    if (unit_str.empty()) {
      out += rational_str(mag);
    } else if (mag == 1) {
      out += unit_str;
    } else {
      out += rational_str(mag) + " " + unit_str;
    }
  }
  return out;
}

}  // namespace holokrein
