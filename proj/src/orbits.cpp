#include "holokrein/orbits.hpp"

#include <cmath>

#include "holokrein/error.hpp"

namespace holokrein {

CMat2 conjugation_from_V(const CMat2& v, double tol) {
  if (std::abs(v.det() - 1.0) > tol) throw Error(ErrorCode::NotUnimodular, "det V must equal 1");
  return v.conj().inverse() * pauli::sigma1<cplx>() * v;
}

ExactMat2 conjugation_from_V(const ExactMat2& v) {
  if (v.det() != ExactComplex(1)) throw Error(ErrorCode::NotUnimodular, "det V must equal 1");
  return v.conj().inverse() * pauli::sigma1<ExactComplex>() * v;
}

bool is_bogoliubov(const CMat2& t, const CMat2& c, double tol) {
  if (std::abs(t.det() - 1.0) > tol) return false;
  return max_abs(t.conj() * c - c * t) <= tol;
}

bool is_bogoliubov(const ExactMat2& t, const ExactMat2& c) {
  return t.det() == ExactComplex(1) && t.conj() * c == c * t;
}

double norm(const SlVector& n) {
  return std::sqrt(std::norm(n.n3) + std::norm(n.nminus) + std::norm(n.nplus));
}

CMat2 orbit_group_element(cplx a, cplx b) {
  const cplx ea = std::exp(a);
  return {ea, ea * b, 0.0, 1.0 / ea};
}

std::pair<cplx, cplx> orbit_group_parameters(const CMat2& s) {
  const cplx ea = s(0, 0);
  return {std::log(ea), s(0, 1) / ea};
}

SlVector adjoint_action(cplx a, cplx b, const SlVector& n) {
  const cplx e2a = std::exp(2.0 * a);
  return {n.n3 + b * n.nplus, e2a * (n.nminus - 2.0 * b * n.n3 - b * b * n.nplus), n.nplus / e2a};
}

ExactSlVector adjoint_action_exact(const ExactComplex& exp_2a, const ExactComplex& b, const ExactSlVector& n) {
  return {n.n3 + b * n.nplus, exp_2a * (n.nminus - ExactComplex(2) * b * n.n3 - b * b * n.nplus),
          n.nplus * exp_2a.inverse()};
}

std::string_view to_string(OrbitType t) {
  switch (t) {
    case OrbitType::SigmaPlus: return "SigmaPlus";
    case OrbitType::SigmaThree: return "SigmaThree";
    case OrbitType::SigmaOne: return "SigmaOne";
    case OrbitType::SigmaMinus: return "SigmaMinus";
  }
  return "?";
}

SlVector canonical_element(OrbitType t) {
  switch (t) {
    case OrbitType::SigmaPlus: return {0.0, 1.0, 0.0};
    case OrbitType::SigmaThree: return {1.0, 0.0, 0.0};
    case OrbitType::SigmaOne: return {0.0, 1.0, 1.0};
    case OrbitType::SigmaMinus: return {0.0, 0.0, 1.0};
  }
  return {};
}

OrbitClassification classify_orbit(const SlVector& n, double rel_tol) {
  const double scale = norm(n);
  if (scale == 0.0) throw Error(ErrorCode::ZeroVector, "cannot classify the zero vector");
  const double tol = rel_tol * scale;
  const cplx q = n.q();
  const bool nplus_zero = std::abs(n.nplus) <= tol;

  auto make_witness = [](cplx a, cplx b, cplx lambda) {
    return OrbitWitness{a, b, lambda, orbit_group_element(a, b)};
  };

  if (nplus_zero) {
    if (std::abs(n.n3) <= tol) {
      // (0, 1, 0) -> (0, e^{2a}, 0)
      return {OrbitType::SigmaPlus, q, make_witness(0.5 * std::log(n.nminus), 0.0, 1.0)};
    }
    // lambda (1, 0, 0) -> lambda (1, -2 b e^{2a}, 0); take a = 0.
    const cplx lambda = n.n3;
    return {OrbitType::SigmaThree, q, make_witness(0.0, -n.nminus / (2.0 * lambda), lambda)};
  }
  if (std::abs(q) > rel_tol * scale * scale) {
    // lambda (0, 1, 1) -> lambda (b, e^{2a}(1 - b^2), e^{-2a}) after scaling q to 1.
    const cplx lambda = std::sqrt(q);
    const cplx b = n.n3 / lambda;
    const cplx a = -0.5 * std::log(n.nplus / lambda);
    return {OrbitType::SigmaOne, q, make_witness(a, b, lambda)};
  }
  // (0, 0, 1) -> (b, -e^{2a} b^2, e^{-2a}); no scaling needed.
  const cplx a = -0.5 * std::log(n.nplus);
  return {OrbitType::SigmaMinus, q, make_witness(a, n.n3, 1.0)};
}

OrbitType classify_orbit(const ExactSlVector& n) {
  if (n.n3.is_zero() && n.nminus.is_zero() && n.nplus.is_zero()) {
    throw Error(ErrorCode::ZeroVector, "cannot classify the zero vector");
  }
  if (n.nplus.is_zero()) return n.n3.is_zero() ? OrbitType::SigmaPlus : OrbitType::SigmaThree;
  return n.q().is_zero() ? OrbitType::SigmaMinus : OrbitType::SigmaOne;
}

}  // namespace holokrein
