#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "holokrein/algebra.hpp"
#include "holokrein/mat2.hpp"

namespace holokrein {

using cplx = std::complex<double>;

enum class Construction { FockBargmann, AntiFockBargmann, Schroedinger };
enum class AntiFockFlavor { Bargmann, Schroedinger };

std::string_view to_string(Construction c);

/// One band of a ladder operator: values[j] is the coefficient of level (j + offset)
/// in pi(x) e_j, where j counts from the lowest level of the window.
struct Band {
  int offset = 0;
  std::vector<cplx> values;
};

/// Krein *-representation of the Heisenberg algebra on a level-indexed truncated space
/// with diagonal Gram matrix. The top level's outgoing raising action is dropped.
struct BasisRep {
  Construction construction = Construction::FockBargmann;
  int sign = 1;
  double theta = 0.0;
  double gamma = 1.0;
  int min_level = 0;
  int max_level = 0;
  Band annihilator;
  Band creator;
  /// Diagonal of the gauge generator pi(a* a) + mu.
  std::vector<double> gauge;
  double mu = 0.0;
  std::vector<double> gram;

  std::string label() const;
  int size() const { return max_level - min_level + 1; }
  int level(int index) const { return min_level + index; }

  Eigen::MatrixXcd annihilator_matrix() const;
  Eigen::MatrixXcd creator_matrix() const;
};

/// Signature and Hilbert-majorant weights with gram = signature * weights.
struct KreinDecomposition {
  std::vector<int> signature;
  std::vector<double> weights;
};

KreinDecomposition krein_decomposition(std::span<const double> gram);

BasisRep build_fock_bargmann(int n);
BasisRep build_antifock(int n, AntiFockFlavor flavor);
/// Basis e_n <-> F_{theta+n} with pi(a) = gamma a_-, pi(a*) = a_+/gamma; for sign -1 the roles
/// are composed with a -> a*, a* -> -a and the Gram picks up (-1)^n.
BasisRep build_schroedinger_theta(double theta, double gamma, int n, int sign, int min_level = 0);

Eigen::MatrixXcd band_matrix(const Band& band, int size);

/// G^{-1} A^H G for a diagonal Gram.
Eigen::MatrixXcd krein_adjoint(const Eigen::MatrixXcd& a, std::span<const double> gram);
inline Eigen::MatrixXcd krein_adjoint(const Eigen::MatrixXcd& a, const BasisRep& rep) {
  return krein_adjoint(a, rep.gram);
}
/// G^{-1} A^H G for a general invertible hermitian Gram.
Eigen::MatrixXcd krein_adjoint(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& gram);

/// <f, g> = f^H G g.
cplx krein_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, std::span<const double> gram);

/// Diagonal of U(s) = exp(i s (pi(a*a) + mu)).
Eigen::VectorXcd gauge_unitary(const BasisRep& rep, double s);

/// W = diag((gamma1/gamma2)^n) mapping the gamma1 representation onto the gamma2 one:
/// W pi_1(x) W^{-1} = pi_2(x), <W f, W g>_2 = <f, g>_1.
Eigen::VectorXd scaling_intertwiner(double theta, double gamma1, double gamma2, int n);

/// Residuals of the defining properties of a built representation.
struct RepVerification {
  double star_property_max_residual = 0.0;
  double star_property_creator_max_residual = 0.0;
  double ccr_max_residual = 0.0;
  double gram_recursion_max_residual = 0.0;
  double gauge_isometry_max_residual = 0.0;
  double gauge_covariance_max_residual = 0.0;
  int gauge_samples = 0;
};

/// Checks *-property (relative, per matrix element), CCR on levels below the top,
/// Gram recursion g_n = sign gamma^2 (theta+n) g_{n-1}, and gauge isometry/covariance for
/// `gauge_samples` values of s drawn from [0, 2 pi) with the given seed.
RepVerification verify_rep(const BasisRep& rep, int gauge_samples = 100, unsigned seed = 12345);

/// V_theta + S(i) V_theta with an optional definite 2x2 commutant weight.
struct DirectSumRep {
  double theta = 0.0;
  double gamma = 1.0;
  int levels = 0;
  Eigen::MatrixXcd annihilator;
  Eigen::MatrixXcd creator;
  Eigen::MatrixXcd gram;
  Eigen::VectorXd gauge;
};

DirectSumRep build_schroedinger_pair(double theta, double gamma, int n,
                                     const Eigen::Matrix2cd& weight = Eigen::Matrix2cd::Identity());

enum class RegularityType { Bargmann, Schroedinger };
std::string_view to_string(RegularityType t);

/// Result of reducing an isomorphism (a*, a)^T = V (z, d)^T with gauge generator
/// sigma(a* a - mu) to canonical form: V s^{-1} = canonical_v, and the S-conjugate of the
/// generator equals sign * (N - theta) with N = z d or the harmonic-oscillator N_S.
struct CanonicalForm {
  CMat2 s;
  int sign = 1;
  RegularityType type = RegularityType::Bargmann;
  double theta = 0.0;
  int level_shift = 0;
  double gamma = 1.0;
  double gauge_phase = 0.0;
  CMat2 canonical_v;
  double residual = 0.0;
};

CanonicalForm reduce_to_canonical(const CMat2& v, cplx mu, double tol = 1e-8);

/// Matrix V of sigma_B^{+-} o rho_gamma or sigma_S^{+-} o rho_gamma.
CMat2 canonical_isomorphism(RegularityType type, int sign, double gamma);

/// Coordinates of the quadratic part of a holomorphic element in the basis
/// pi(sigma3) = z d + 1/2, pi(sigma+) = -z^2/2, pi(sigma-) = d^2/2, plus the remaining constant.
struct QuadraticCoordinates {
  cplx n3, nminus, nplus;
  cplx constant;
};

/// Reads the coordinates off a normal-ordered holomorphic element of degree <= 2;
/// linear terms must be absent.
QuadraticCoordinates quadratic_coordinates(const NumericElement& q, double tol = 1e-12);

/// One step of the Gram propagation g_n = gamma^2 (theta + n) g_{n-1}.
struct ForcingStep {
  int level;
  double factor;
  double value;
  bool forced_zero;
};

struct NullDiagnosis {
  bool null_subrepresentation = false;
  std::vector<int> forced_zero_levels;
  std::vector<ForcingStep> chain;
  std::vector<double> gram;
  int min_level = 0;
  int max_level = 0;
};

/// Propagates the *-property constraints over levels min_level..max_level; a vanishing factor
/// theta + n forces every Gram value above it to zero (a null subrepresentation).
NullDiagnosis detect_null_subrep(double theta, int min_level, int max_level, double gamma = 1.0);

}  // namespace holokrein
