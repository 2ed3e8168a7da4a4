#pragma once

#include <complex>
#include <optional>
#include <string_view>

#include "holokrein/exact.hpp"
#include "holokrein/mat2.hpp"

namespace holokrein {

using cplx = std::complex<double>;

/// C_K = conj(V)^{-1} sigma1 V, the conjugation induced on (z, d) by the
/// isomorphism (a*, a)^T = V (z, d)^T.
CMat2 conjugation_from_V(const CMat2& v, double tol = 1e-10);
ExactMat2 conjugation_from_V(const ExactMat2& v);

/// det T = 1 and conj(T) C = C T.
bool is_bogoliubov(const CMat2& t, const CMat2& c, double tol = 1e-10);
bool is_bogoliubov(const ExactMat2& t, const ExactMat2& c);

/// Coordinates of n3 sigma3 + n- sigma+ + n+ sigma-.
template <typename T>
struct BasicSlVector {
  T n3{}, nminus{}, nplus{};

  /// The adjoint invariant n3^2 + n- n+.
  T q() const { return n3 * n3 + nminus * nplus; }

  Mat2<T> matrix() const { return {n3, nminus, nplus, T(0) - n3}; }
  friend bool operator==(const BasicSlVector& l, const BasicSlVector& r) {
    return l.n3 == r.n3 && l.nminus == r.nminus && l.nplus == r.nplus;
  }
};

using SlVector = BasicSlVector<cplx>;
using ExactSlVector = BasicSlVector<ExactComplex>;

double norm(const SlVector& n);

/// exp(a sigma3) exp(b sigma+) = [[e^a, e^a b], [0, e^-a]].
CMat2 orbit_group_element(cplx a, cplx b);
/// Inverse of `orbit_group_element` for upper-triangular unimodular S (principal log).
std::pair<cplx, cplx> orbit_group_parameters(const CMat2& s);

/// Adjoint action of exp(a sigma3) exp(b sigma+) on n:
/// (n3 + b n+, e^{2a}(n- - 2 b n3 - b^2 n+), e^{-2a} n+).
SlVector adjoint_action(cplx a, cplx b, const SlVector& n);
/// Exact variant parametrized by e^{2a} directly.
ExactSlVector adjoint_action_exact(const ExactComplex& exp_2a, const ExactComplex& b, const ExactSlVector& n);

enum class OrbitType { SigmaPlus, SigmaThree, SigmaOne, SigmaMinus };

std::string_view to_string(OrbitType t);

/// Canonical representative of each orbit as an SlVector.
SlVector canonical_element(OrbitType t);

/// adjoint_action(a, b, lambda * canonical_element(type)) reproduces the classified input.
struct OrbitWitness {
  cplx a;
  cplx b;
  cplx lambda;
  CMat2 s;
};

struct OrbitClassification {
  OrbitType type;
  cplx q;
  std::optional<OrbitWitness> witness;
};

/// Classifies n up to the S-action and overall scaling; zero tests use tolerance
/// `rel_tol` relative to the norm of n.
OrbitClassification classify_orbit(const SlVector& n, double rel_tol = 1e-10);
/// Exact zero tests; no witness (witnesses need logarithms and square roots).
OrbitType classify_orbit(const ExactSlVector& n);

}  // namespace holokrein
