#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "holokrein/algebra.hpp"

namespace holokrein {

using cplx = std::complex<double>;
using EtaSignature = std::vector<int>;
using MultiIndex = std::vector<int>;

void validate_eta(const EtaSignature& eta);

/// Finitely supported polynomial in z_1..z_M with total degree at most degree_cap.
struct MultiIndexState {
  int modes = 0;
  int degree_cap = 0;
  std::map<MultiIndex, cplx> coefficients;

  static MultiIndexState vacuum(int modes, int degree_cap);
  static MultiIndexState monomial(const MultiIndex& n, int degree_cap, cplx c = 1.0);

  void validate() const;
  void add(const MultiIndex& n, cplx c);
  bool is_zero(double tol = 0.0) const;
};

struct EtaDiagonalization {
  Eigen::MatrixXcd l;
  EtaSignature eta;
};

/// L with L H L^H = diag(eta): eigenvectors scaled by |lambda|^{-1/2}, positive eigenvalues
/// first, each group ordered by the index of the dominant eigenvector component.
EtaDiagonalization diagonalize_eta(const Eigen::MatrixXcd& h, double rel_tol = 1e-10);

/// rho(a_i) = a_i, rho(a_i*) = a_i* for eta_i = +1, and a_i <-> a_i* for eta_i = -1, mapping
/// the eta-twisted algebra onto the standard multimode CCR algebra.
AlgebraElement rho_iso(const EtaSignature& eta, const AlgebraElement& x);
NumericElement rho_iso(const EtaSignature& eta, const NumericElement& x);

/// Gauge automorphism a_i -> e^{-is} a_i, a_i* -> e^{is} a_i*.
NumericElement gauge_transform(const NumericElement& x, double s);

/// Monomial representation: pi(a_i) = d/dz_i, pi(a_i*) = eta_i z_i, with the top total degree's
/// raising action dropped.
struct MultimodeRep {
  EtaSignature eta;
  int degree_cap = 0;
  std::vector<MultiIndex> basis;
  std::map<MultiIndex, int> index;
  std::vector<Eigen::MatrixXcd> annihilators;
  std::vector<Eigen::MatrixXcd> creators;
  std::vector<double> gram;
  /// Diagonal of N = sum_i eta_i pi(a_i*) pi(a_i).
  std::vector<double> gauge;

  int modes() const { return static_cast<int>(eta.size()); }
  int size() const { return static_cast<int>(basis.size()); }
  Eigen::VectorXcd to_vector(const MultiIndexState& f) const;
  MultiIndexState from_vector(const Eigen::VectorXcd& v, double tol = 0.0) const;
  cplx inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const;
  Eigen::VectorXcd gauge_apply(const Eigen::VectorXcd& f, double s) const;
};

MultimodeRep build_multimode_rep(const EtaSignature& eta, int degree_cap);

struct MultimodeVerification {
  /// max |[pi(a_i), pi(a_j*)] - delta_ij eta_i| below the top total degree
  double ccr_max_residual = 0.0;
  /// max |krein_adjoint(pi(a_i)) - pi(a_i*)|
  double star_property_max_residual = 0.0;
  std::vector<int> gauge_spectrum;
};

MultimodeVerification verify_multimode_rep(const MultimodeRep& rep);

struct SpectralSupport {
  std::vector<int> support;
  /// (k, c_k) for every k in the unaliased window.
  std::vector<std::pair<int, cplx>> coefficients;
};

/// Fourier coefficients of s -> <g, U(s) f> sampled at `nodes` equispaced points, with k
/// taken from the window [D + 1 - nodes, D].
SpectralSupport spectral_condition_check(const MultimodeRep& rep, const MultiIndexState& f,
                                         const MultiIndexState& g, int nodes, double tol = 1e-10);

struct VacuumDescent {
  MultiIndexState vacuum;
  int lowest_component = 0;
  int steps = 0;
  /// Modes (1-based) whose annihilator was applied, in order.
  std::vector<int> path;
};

VacuumDescent vacuum_descent(const MultimodeRep& rep, const MultiIndexState& f, double tol = 1e-12);

}  // namespace holokrein
