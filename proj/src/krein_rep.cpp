#include "holokrein/krein_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "holokrein/error.hpp"
#include "holokrein/orbits.hpp"
#include "holokrein/special.hpp"

namespace holokrein {

namespace {

constexpr double kTiny = 1e-300;

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

double relative_gap(cplx l, cplx r) {
  const double scale = std::max(std::abs(l), std::abs(r));
  return scale == 0.0 ? 0.0 : std::abs(l - r) / scale;
}

void require_levels(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least two levels (N >= 1)");
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::FockBargmann: return "fock_bargmann";
    case Construction::AntiFockBargmann: return "antifock_bargmann";
    case Construction::Schroedinger: return "schroedinger";
  }
  return "?";
}

std::string_view to_string(RegularityType t) {
  return t == RegularityType::Bargmann ? "Bargmann" : "Schroedinger";
}

std::string BasisRep::label() const {
  std::string out(to_string(construction));
  if (construction == Construction::Schroedinger) out += sign > 0 ? "_plus" : "_minus";
  return out;
}

Eigen::MatrixXcd band_matrix(const Band& band, int size) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  for (int j = 0; j < size && j < static_cast<int>(band.values.size()); ++j) {
    const int target = j + band.offset;
    if (target >= 0 && target < size) m(target, j) = band.values[static_cast<std::size_t>(j)];
  }
  return m;
}

Eigen::MatrixXcd BasisRep::annihilator_matrix() const { return band_matrix(annihilator, size()); }
Eigen::MatrixXcd BasisRep::creator_matrix() const { return band_matrix(creator, size()); }

KreinDecomposition krein_decomposition(std::span<const double> gram) {
  KreinDecomposition out;
  for (double g : gram) {
    if (g == 0.0) throw Error(ErrorCode::Degenerate, "Gram diagonal has a zero entry");
    out.signature.push_back(g > 0 ? 1 : -1);
    out.weights.push_back(std::abs(g));
  }
  return out;
}

BasisRep build_fock_bargmann(int n) {
  require_levels(n);
  BasisRep rep;
  rep.construction = Construction::FockBargmann;
  rep.max_level = n;
  rep.annihilator.offset = -1;
  rep.creator.offset = 1;
  double factorial = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    rep.annihilator.values.emplace_back(static_cast<double>(k));
    rep.creator.values.emplace_back(k < n ? 1.0 : 0.0);
    rep.gram.push_back(factorial);
    rep.gauge.push_back(static_cast<double>(k));
  }
  return rep;
}

BasisRep build_antifock(int n, AntiFockFlavor flavor) {
  if (flavor == AntiFockFlavor::Schroedinger) return build_schroedinger_theta(0.0, 1.0, n, -1);
  require_levels(n);
  BasisRep rep;
  rep.construction = Construction::AntiFockBargmann;
  rep.sign = -1;
  rep.max_level = n;
  // pi(a) = z, pi(a*) = -d/dz
  rep.annihilator.offset = 1;
  rep.creator.offset = -1;
  double factorial = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    rep.annihilator.values.emplace_back(k < n ? 1.0 : 0.0);
    rep.creator.values.emplace_back(-static_cast<double>(k));
    rep.gram.push_back(parity(k) * factorial);
    rep.gauge.push_back(-static_cast<double>(k + 1));
  }
  return rep;
}

BasisRep build_schroedinger_theta(double theta, double gamma, int n, int sign, int min_level) {
  require_levels(n);
  if (!(theta > -1.0 && theta <= 0.0)) throw Error(ErrorCode::DomainError, "theta must lie in (-1, 0]");
  if (!(gamma > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (min_level > n) throw Error(ErrorCode::InvalidArgument, "empty level window");
  if (theta == 0.0 && min_level < 0) {
    throw Error(ErrorCode::NullSubrepresentation,
                "theta = 0 with negative levels forces <F_n, F_m> = 0 for all n, m >= 0");
  }

  BasisRep rep;
  rep.construction = Construction::Schroedinger;
  rep.sign = sign;
  rep.theta = theta;
  rep.gamma = gamma;
  rep.min_level = min_level;
  rep.max_level = n;
  // Ladder on F_{theta+k}: a_- lowers with factor (theta + k), a_+ raises with factor 1.
  Band lowering{-1, {}}, raising{1, {}};
  for (int k = min_level; k <= n; ++k) {
    const double lam = theta + k;
    rep.gram.push_back((sign > 0 ? 1.0 : parity(k)) * std::pow(gamma, 2.0 * k) * gamma_fn(lam + 1.0));
    if (sign > 0) {
      lowering.values.emplace_back(gamma * lam);
      raising.values.emplace_back(k < n ? 1.0 / gamma : 0.0);
      rep.gauge.push_back(lam);
    } else {
      // rho^-: a -> a*, a* -> -a
      raising.values.emplace_back(k < n ? 1.0 / gamma : 0.0);
      lowering.values.emplace_back(-gamma * lam);
      rep.gauge.push_back(-(lam + 1.0));
    }
  }
  if (sign > 0) {
    rep.annihilator = lowering;
    rep.creator = raising;
  } else {
    rep.annihilator = raising;
    rep.creator = lowering;
  }
  return rep;
}

Eigen::MatrixXcd krein_adjoint(const Eigen::MatrixXcd& a, std::span<const double> gram) {
  const auto n = static_cast<Eigen::Index>(gram.size());
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::InvalidArgument, "matrix and Gram sizes differ");
  Eigen::MatrixXcd out = a.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) *= gram[static_cast<std::size_t>(j)] / gram[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Eigen::MatrixXcd krein_adjoint(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& gram) {
  return gram.partialPivLu().solve(a.adjoint() * gram);
}

cplx krein_inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, std::span<const double> gram) {
  cplx acc{};
  for (Eigen::Index i = 0; i < f.size(); ++i) acc += std::conj(f(i)) * gram[static_cast<std::size_t>(i)] * g(i);
  return acc;
}

Eigen::VectorXcd gauge_unitary(const BasisRep& rep, double s) {
  Eigen::VectorXcd u(rep.size());
  for (int j = 0; j < rep.size(); ++j) u(j) = std::polar(1.0, s * rep.gauge[static_cast<std::size_t>(j)]);
  return u;
}

Eigen::VectorXd scaling_intertwiner(double /*theta*/, double gamma1, double gamma2, int n) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0)) throw Error(ErrorCode::DomainError, "gamma must be positive");
  Eigen::VectorXd w(n + 1);
  for (int k = 0; k <= n; ++k) w(k) = std::pow(gamma1 / gamma2, k);
  return w;
}

RepVerification verify_rep(const BasisRep& rep, int gauge_samples, unsigned seed) {
  RepVerification out;
  const int size = rep.size();
  const Eigen::MatrixXcd a = rep.annihilator_matrix();
  const Eigen::MatrixXcd c = rep.creator_matrix();

  // <e_n, pi(a) e_m> = <pi(a*) e_n, e_m>, and the same with a <-> a*.
  for (int n = 0; n < size; ++n) {
    for (int m = 0; m < size; ++m) {
      const double gn = rep.gram[static_cast<std::size_t>(n)], gm = rep.gram[static_cast<std::size_t>(m)];
      out.star_property_max_residual =
          std::max(out.star_property_max_residual, relative_gap(gn * a(n, m), std::conj(c(m, n)) * gm));
      out.star_property_creator_max_residual =
          std::max(out.star_property_creator_max_residual, relative_gap(gn * c(n, m), std::conj(a(m, n)) * gm));
    }
  }

  // CCR away from truncation edges: the top level always, the bottom level when its
  // lowering action left the window.
  const Band& lowering = rep.annihilator.offset < 0 ? rep.annihilator : rep.creator;
  const int lo = lowering.values.front() != cplx{} ? 1 : 0;
  const Eigen::MatrixXcd comm = a * c - c * a;
  for (int i = lo; i < size - 1; ++i) {
    for (int j = lo; j < size - 1; ++j) {
      const cplx expected = i == j ? 1.0 : 0.0;
      out.ccr_max_residual = std::max(out.ccr_max_residual, std::abs(comm(i, j) - expected));
    }
  }

  for (int j = 1; j < size; ++j) {
    const int n = rep.level(j);
    const double expected =
        rep.sign * rep.gamma * rep.gamma * (rep.theta + n) * rep.gram[static_cast<std::size_t>(j - 1)];
    const double g = rep.gram[static_cast<std::size_t>(j)];
    const double scale = std::max({std::abs(g), std::abs(expected), kTiny});
    out.gram_recursion_max_residual = std::max(out.gram_recursion_max_residual, std::abs(g - expected) / scale);
  }

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  out.gauge_samples = gauge_samples;
  for (int k = 0; k < gauge_samples; ++k) {
    const double s = dist(rng);
    const Eigen::VectorXcd u = gauge_unitary(rep, s);
    const Eigen::MatrixXcd u_mat = u.asDiagonal();
    const Eigen::MatrixXcd u_inv = u.cwiseInverse().asDiagonal();
    const Eigen::MatrixXcd adj = krein_adjoint(u_mat, rep);
    out.gauge_isometry_max_residual = std::max(out.gauge_isometry_max_residual, (adj - u_inv).cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd conj_a = u_mat * a * u_inv;
    const cplx phase = std::polar(1.0, -s);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        if (a(i, j) == cplx{}) continue;
        out.gauge_covariance_max_residual =
            std::max(out.gauge_covariance_max_residual, std::abs(conj_a(i, j) - phase * a(i, j)) / std::abs(a(i, j)));
      }
    }
  }
  return out;
}

DirectSumRep build_schroedinger_pair(double theta, double gamma, int n, const Eigen::Matrix2cd& weight) {
  const BasisRep first = build_schroedinger_theta(theta, gamma, n, 1);
  if ((weight - weight.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::DomainError, "commutant weight must be hermitian");
  }
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(weight).eigenvalues();
  if (!(ev(0) > 0.0 || ev(1) < 0.0)) {
    throw Error(ErrorCode::DomainError, "commutant weight must be positive or negative definite");
  }
  if (std::abs(weight(0, 1)) > 1e-12) {
    throw Error(ErrorCode::DomainError,
                "the two summands admit no nonzero Krein-compatible coupling; off-diagonal weight must vanish");
  }

  const int size = n + 1;
  DirectSumRep out;
  out.theta = theta;
  out.gamma = gamma;
  out.levels = size;
  out.annihilator = Eigen::MatrixXcd::Zero(2 * size, 2 * size);
  out.creator = Eigen::MatrixXcd::Zero(2 * size, 2 * size);
  out.gram = Eigen::MatrixXcd::Zero(2 * size, 2 * size);
  out.gauge = Eigen::VectorXd::Zero(2 * size);

  out.annihilator.topLeftCorner(size, size) = first.annihilator_matrix();
  out.creator.topLeftCorner(size, size) = first.creator_matrix();
  const cplx minus_i(0.0, -1.0);
  for (int k = 0; k < size; ++k) {
    out.gram(k, k) = weight(0, 0) * first.gram[static_cast<std::size_t>(k)];
    out.gauge(k) = first.gauge[static_cast<std::size_t>(k)];
    // Basis F_{theta+k}(i z): pi(a) = -i gamma a_+, pi(a*) = -i a_- / gamma.
    const int j = size + k;
    const double lam = theta + k;
    if (k + 1 < size) out.annihilator(j + 1, j) = minus_i * gamma;
    if (k > 0) out.creator(j - 1, j) = minus_i * lam / gamma;
    out.gram(j, j) = weight(1, 1) * parity(k) * std::pow(gamma, -2.0 * k) * gamma_fn(lam + 1.0);
    out.gauge(j) = -(lam + 1.0);
  }
  return out;
}

QuadraticCoordinates quadratic_coordinates(const NumericElement& q, double tol) {
  if (q.algebra().kind() != AlgebraKind::Holomorphic) {
    throw Error(ErrorCode::IncompatibleAlgebras, "expected a holomorphic element");
  }
  const Generator z{true, 0}, d{false, 0};
  for (const auto& [w, c] : q.terms()) {
    if (w.size() > 2 || (w.size() == 1 && std::abs(c) > tol)) {
      throw Error(ErrorCode::InvalidArgument, "element is not a quadratic generator");
    }
  }
  const NumericElement ordered = normal_order(q);
  const cplx zz = ordered.coefficient({z, z});
  const cplx zd = ordered.coefficient({z, d});
  const cplx dd = ordered.coefficient({d, d});
  const cplx c0 = ordered.coefficient({});
  return {zd, -2.0 * zz, 2.0 * dd, c0 - zd / 2.0};
}

CMat2 canonical_isomorphism(RegularityType type, int sign, double gamma) {
  const double r = 1.0 / std::numbers::sqrt2;
  const double gi = 1.0 / gamma;
  if (type == RegularityType::Bargmann) {
    return sign > 0 ? CMat2{gi, 0.0, 0.0, gamma} : CMat2{0.0, -gi, gamma, 0.0};
  }
  return sign > 0 ? CMat2{gi * r, -gi * r, gamma * r, gamma * r} : CMat2{-gi * r, -gi * r, gamma * r, -gamma * r};
}

namespace {

// theta_raw -> (theta in (-1, 0], integer shift) with snapping near integers.
std::pair<double, int> normalize_theta(double raw, double tol) {
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) <= tol) return {0.0, static_cast<int>(nearest)};
  const double shift = std::ceil(raw);
  return {raw - shift, static_cast<int>(shift)};
}

struct Branch {
  CMat2 s;
  int sign;
  cplx theta_raw;
  CMat2 v0;
  cplx gamma;
};

}  // namespace

CanonicalForm reduce_to_canonical(const CMat2& v, cplx mu, double tol) {
  if (std::abs(v.det() - 1.0) > 1e-10) throw Error(ErrorCode::NotUnimodular, "det V must equal 1");

  const GeneratorSet heis = GeneratorSet::heisenberg();
  const NumericElement generator =
      NumericElement::generator(heis, heis.creator()) * NumericElement::generator(heis, heis.annihilator()) -
      NumericElement::scalar(heis, mu);
  const NumericElement q = apply_isomorphism(v, generator);
  const QuadraticCoordinates coords = quadratic_coordinates(q);
  const SlVector n{coords.n3, coords.nminus, coords.nplus};
  const cplx c = coords.constant;

  const OrbitClassification cls = classify_orbit(n);
  if (cls.type == OrbitType::SigmaPlus || cls.type == OrbitType::SigmaMinus) {
    throw Error(ErrorCode::NotRegularizable, "gauge generator lies on a degenerate orbit (q(n) = 0)");
  }

  // Gamma_T^{-1} (.) Gamma_T acts on n as adjoint_action(a, b) when T = S(e^{-a}, -b e^{a}); the
  // witness inverse therefore uses T = S(e^{a_w}, b_w e^{a_w}).
  auto reducing_matrix = [](const OrbitWitness& w) {
    const cplx ea = std::exp(w.a);
    return s_matrix(ea, w.b * ea);
  };

  CanonicalForm out;
  if (cls.type == OrbitType::SigmaThree) {
    const OrbitWitness& w = *cls.witness;
    const cplx lambda = w.lambda;
    if (std::abs(std::abs(lambda) - 1.0) > tol || std::abs(lambda.imag()) > tol) {
      throw Error(ErrorCode::NotRegularizable, "quadratic part is not conjugate to +-z d");
    }
    out.sign = lambda.real() > 0 ? 1 : -1;
    out.type = RegularityType::Bargmann;
    // lambda (N_B + 1/2) + c = sign (N_B - theta)
    const cplx theta_raw = -(0.5 + c / lambda);
    if (std::abs(theta_raw.imag()) > tol || std::abs(theta_raw.real() - std::round(theta_raw.real())) > tol) {
      throw Error(ErrorCode::NotRegularizable, "Bargmann-type generator must have integer spectrum");
    }
    out.theta = 0.0;
    out.level_shift = static_cast<int>(std::round(theta_raw.real()));
    CMat2 t = reducing_matrix(w);
    CMat2 v0 = v * t.inverse();
    // The Bargmann scale is absorbed by S(alpha, 0).
    const cplx alpha = out.sign > 0 ? v0(0, 0) : -1.0 / v0(0, 1);
    const CMat2 t2 = s_matrix(alpha, 0.0);
    out.s = t2 * t;
    out.canonical_v = v * out.s.inverse();
    out.gamma = 1.0;
    out.residual = max_abs(out.canonical_v - canonical_isomorphism(out.type, out.sign, 1.0));
    if (out.residual > tol) throw Error(ErrorCode::NotRegularizable, "reduction did not reach canonical form");
    return out;
  }

  // Schroedinger type: classify -n so that the canonical element is -sigma1 <-> N_S + 1/2.
  const OrbitClassification flipped = classify_orbit(SlVector{-n.n3, -n.nminus, -n.nplus});
  const OrbitWitness& w = *flipped.witness;
  const cplx lambda = w.lambda;
  const double r2 = std::numbers::sqrt2;
  const CMat2 s_i = s_matrix(cplx(0.0, 1.0), 0.0);

  Branch branches[2];
  {
    const CMat2 t = reducing_matrix(w);
    // lambda (N_S + 1/2) + c
    branches[0] = {t, 1, -(0.5 + c / lambda), v * t.inverse(), {}};
    // S(i) maps N_S to -N_S - 1: -lambda N_S - lambda/2 + c
    const CMat2 ti = s_i * t;
    branches[1] = {ti, -1, -(0.5 - c / lambda), v * ti.inverse(), {}};
  }
  if (std::abs(std::abs(lambda) - 1.0) > tol) {
    throw Error(ErrorCode::NotRegularizable, "quadratic part is not conjugate to +-N_S");
  }

  const Branch* best = nullptr;
  double best_phase = 0.0;
  for (Branch& b : branches) {
    b.sign *= lambda.real() > 0 ? 1 : -1;
    b.gamma = r2 * b.v0(1, 0);
    // Stabilizer S(-1, 0) flips the overall sign of V0.
    if (b.gamma.real() < 0.0) {
      b.gamma = -b.gamma;
      b.s = s_matrix(-1.0, 0.0) * b.s;
      b.v0 = v * b.s.inverse();
    }
    const double phase = std::abs(std::arg(b.gamma));
    if (best == nullptr || phase < best_phase) {
      best = &b;
      best_phase = phase;
    }
  }

  out.type = RegularityType::Schroedinger;
  out.sign = best->sign;
  out.s = best->s;
  out.canonical_v = best->v0;
  if (std::abs(best->theta_raw.imag()) > tol) {
    throw Error(ErrorCode::DomainError, "theta must be real");
  }
  const auto [theta, shift] = normalize_theta(best->theta_raw.real(), tol);
  out.theta = theta;
  out.level_shift = shift;
  out.gamma = std::abs(best->gamma);
  out.gauge_phase = std::arg(best->gamma);
  // Compare against the canonical form carrying the same complex gamma.
  const CMat2 expected = [&] {
    const cplx g = best->gamma, gi = 1.0 / best->gamma, rr = 1.0 / r2;
    return out.sign > 0 ? CMat2{gi * rr, -gi * rr, g * rr, g * rr} : CMat2{-gi * rr, -gi * rr, g * rr, -g * rr};
  }();
  out.residual = max_abs(out.canonical_v - expected);
  if (out.residual > tol) throw Error(ErrorCode::NotRegularizable, "reduction did not reach canonical form");
  return out;
}

NullDiagnosis detect_null_subrep(double theta, int min_level, int max_level, double gamma) {
  if (min_level > max_level) throw Error(ErrorCode::InvalidArgument, "empty level window");
  NullDiagnosis out;
  out.min_level = min_level;
  out.max_level = max_level;
  // g_n = gamma^2 (theta + n) g_{n-1}, from <e_n, pi(a) e_{n+1}> = <pi(a*) e_n, e_{n+1}>.
  double g = 1.0;
  bool forced = false;
  out.gram.push_back(g);
  for (int n = min_level + 1; n <= max_level; ++n) {
    const double factor = gamma * gamma * (theta + n);
    g *= factor;
    if (factor == 0.0) forced = true;
    if (forced) {
      g = 0.0;
      out.forced_zero_levels.push_back(n);
    }
    out.chain.push_back({n, factor, g, forced});
    out.gram.push_back(g);
  }
  out.null_subrepresentation = forced;
  if (!forced && min_level <= 0 && max_level >= 0) {
    // Fix the free scale so that g_0 = Gamma(theta + 1).
    const double scale = gamma_fn(theta + 1.0) / out.gram[static_cast<std::size_t>(-min_level)];
    for (double& x : out.gram) x *= scale;
    for (auto& step : out.chain) step.value *= scale;
  }
  return out;
}

}  // namespace holokrein
