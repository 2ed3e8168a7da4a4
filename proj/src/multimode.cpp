#include "holokrein/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "holokrein/error.hpp"

namespace holokrein {

void validate_eta(const EtaSignature& eta) {
  if (eta.empty()) throw Error(ErrorCode::InvalidArgument, "eta must have at least one mode");
  for (int e : eta) {
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "eta entries must be +1 or -1");
  }
}

MultiIndexState MultiIndexState::vacuum(int modes, int degree_cap) {
  return monomial(MultiIndex(static_cast<std::size_t>(modes), 0), degree_cap);
}

MultiIndexState MultiIndexState::monomial(const MultiIndex& n, int degree_cap, cplx c) {
  MultiIndexState out;
  out.modes = static_cast<int>(n.size());
  out.degree_cap = degree_cap;
  out.add(n, c);
  return out;
}

void MultiIndexState::validate() const {
  for (const auto& [n, c] : coefficients) {
    if (static_cast<int>(n.size()) != modes) throw Error(ErrorCode::InvalidArgument, "multi-index has wrong length");
    int total = 0;
    for (int k : n) {
      if (k < 0) throw Error(ErrorCode::InvalidArgument, "multi-index entries must be nonnegative");
      total += k;
    }
    if (total > degree_cap) throw Error(ErrorCode::InvalidArgument, "state exceeds the total-degree cap");
  }
}

void MultiIndexState::add(const MultiIndex& n, cplx c) {
  if (c == cplx{}) return;
  auto [it, inserted] = coefficients.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) coefficients.erase(it);
  }
}

bool MultiIndexState::is_zero(double tol) const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

EtaDiagonalization diagonalize_eta(const Eigen::MatrixXcd& h, double rel_tol) {
  if (h.rows() != h.cols() || h.rows() == 0) throw Error(ErrorCode::InvalidArgument, "H must be square");
  const double scale = h.norm();
  if ((h - h.adjoint()).norm() > rel_tol * std::max(scale, 1.0)) {
    throw Error(ErrorCode::NotHermitian, "eta matrix must be hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd lambda = solver.eigenvalues();
  Eigen::MatrixXcd u = solver.eigenvectors();
  const auto m = h.rows();

  for (Eigen::Index k = 0; k < m; ++k) {
    if (std::abs(lambda(k)) <= rel_tol * scale) throw Error(ErrorCode::Degenerate, "eta matrix is singular");
  }

  std::vector<Eigen::Index> dominant(static_cast<std::size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::Index idx = 0;
    u.col(k).cwiseAbs().maxCoeff(&idx);
    // Leading component (largest, earliest) made real positive.
    for (Eigen::Index r = 0; r < m; ++r) {
      if (std::abs(u(r, k)) > std::abs(u(idx, k)) * (1.0 - 1e-12)) {
        idx = r;
        break;
      }
    }
    dominant[static_cast<std::size_t>(k)] = idx;
    u.col(k) *= std::abs(u(idx, k)) / u(idx, k);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    const bool px = lambda(x) > 0, py = lambda(y) > 0;
    if (px != py) return px;
    return dominant[static_cast<std::size_t>(x)] < dominant[static_cast<std::size_t>(y)];
  });

  EtaDiagonalization out;
  out.l.resize(m, m);
  for (Eigen::Index row = 0; row < m; ++row) {
    const Eigen::Index k = order[static_cast<std::size_t>(row)];
    out.l.row(row) = u.col(k).adjoint() / std::sqrt(std::abs(lambda(k)));
    out.eta.push_back(lambda(k) > 0 ? 1 : -1);
  }
  return out;
}

namespace {

template <typename T>
BasicElement<T> rho_impl(const EtaSignature& eta, const BasicElement<T>& x) {
  validate_eta(eta);
  if (x.algebra() != GeneratorSet::multimode(eta)) {
    throw Error(ErrorCode::IncompatibleAlgebras, "element does not belong to the eta-twisted algebra");
  }
  const GeneratorSet target = GeneratorSet::multimode(EtaSignature(eta.size(), 1));
  return substitute(x, target, [&](const Generator& g) {
    const bool flip = eta[static_cast<std::size_t>(g.mode - 1)] < 0;
    return BasicElement<T>::generator(target, Generator{flip ? !g.creator : g.creator, g.mode});
  });
}

}  // namespace

AlgebraElement rho_iso(const EtaSignature& eta, const AlgebraElement& x) { return rho_impl(eta, x); }
NumericElement rho_iso(const EtaSignature& eta, const NumericElement& x) { return rho_impl(eta, x); }

NumericElement gauge_transform(const NumericElement& x, double s) {
  NumericElement out(x.algebra());
  for (const auto& [w, c] : x.terms()) {
    int charge = 0;
    for (const auto& g : w) charge += g.creator ? 1 : -1;
    out.add_term(w, c * std::polar(1.0, s * charge));
  }
  return out;
}

MultimodeRep build_multimode_rep(const EtaSignature& eta, int degree_cap) {
  validate_eta(eta);
  if (degree_cap < 1) throw Error(ErrorCode::InvalidArgument, "degree cap must be at least 1");
  MultimodeRep rep;
  rep.eta = eta;
  rep.degree_cap = degree_cap;
  const int m = static_cast<int>(eta.size());

  // Enumerate by total degree, then lexicographically descending in z_1.
  for (int total = 0; total <= degree_cap; ++total) {
    MultiIndex n(static_cast<std::size_t>(m), 0);
    auto fill = [&](auto&& self, int mode, int remaining) -> void {
      if (mode == m - 1) {
        n[static_cast<std::size_t>(mode)] = remaining;
        rep.index.emplace(n, static_cast<int>(rep.basis.size()));
        rep.basis.push_back(n);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        n[static_cast<std::size_t>(mode)] = k;
        self(self, mode + 1, remaining - k);
      }
    };
    fill(fill, 0, total);
  }

  const int size = rep.size();
  for (int i = 0; i < m; ++i) {
    Eigen::MatrixXcd ann = Eigen::MatrixXcd::Zero(size, size);
    Eigen::MatrixXcd cre = Eigen::MatrixXcd::Zero(size, size);
    const auto ui = static_cast<std::size_t>(i);
    for (int col = 0; col < size; ++col) {
      MultiIndex n = rep.basis[static_cast<std::size_t>(col)];
      const int total = std::accumulate(n.begin(), n.end(), 0);
      if (n[ui] > 0) {
        MultiIndex lower = n;
        --lower[ui];
        ann(rep.index.at(lower), col) = static_cast<double>(n[ui]);
      }
      if (total < degree_cap) {
        MultiIndex upper = n;
        ++upper[ui];
        cre(rep.index.at(upper), col) = static_cast<double>(eta[ui]);
      }
    }
    rep.annihilators.push_back(std::move(ann));
    rep.creators.push_back(std::move(cre));
  }

  for (const auto& n : rep.basis) {
    double g = 1.0;
    int total = 0;
    for (int i = 0; i < m; ++i) {
      const int k = n[static_cast<std::size_t>(i)];
      total += k;
      for (int j = 2; j <= k; ++j) g *= j;
      if (eta[static_cast<std::size_t>(i)] < 0 && k % 2 == 1) g = -g;
    }
    rep.gram.push_back(g);
    rep.gauge.push_back(static_cast<double>(total));
  }
  return rep;
}

MultimodeVerification verify_multimode_rep(const MultimodeRep& rep) {
  MultimodeVerification out;
  const int size = rep.size();
  std::vector<int> stable;
  for (int j = 0; j < size; ++j) {
    if (rep.gauge[static_cast<std::size_t>(j)] < rep.degree_cap) stable.push_back(j);
  }
  for (int i = 0; i < rep.modes(); ++i) {
    const auto& ai = rep.annihilators[static_cast<std::size_t>(i)];
    for (int j = 0; j < rep.modes(); ++j) {
      const auto& cj = rep.creators[static_cast<std::size_t>(j)];
      const Eigen::MatrixXcd comm = ai * cj - cj * ai;
      const double expected = i == j ? rep.eta[static_cast<std::size_t>(i)] : 0.0;
      for (int r : stable) {
        for (int c : stable) {
          const cplx target = r == c ? expected : 0.0;
          out.ccr_max_residual = std::max(out.ccr_max_residual, std::abs(comm(r, c) - target));
        }
      }
    }
    Eigen::MatrixXcd adj = ai.adjoint();
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) adj(r, c) *= rep.gram[static_cast<std::size_t>(c)] / rep.gram[static_cast<std::size_t>(r)];
    }
    out.star_property_max_residual = std::max(
        out.star_property_max_residual, (adj - rep.creators[static_cast<std::size_t>(i)]).cwiseAbs().maxCoeff());
  }
  for (double g : rep.gauge) out.gauge_spectrum.push_back(static_cast<int>(std::lround(g)));
  std::sort(out.gauge_spectrum.begin(), out.gauge_spectrum.end());
  out.gauge_spectrum.erase(std::unique(out.gauge_spectrum.begin(), out.gauge_spectrum.end()), out.gauge_spectrum.end());
  return out;
}

Eigen::VectorXcd MultimodeRep::to_vector(const MultiIndexState& f) const {
  if (f.modes != modes()) throw Error(ErrorCode::IncompatibleAlgebras, "state has a different number of modes");
  f.validate();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size());
  for (const auto& [n, c] : f.coefficients) {
    auto it = index.find(n);
    if (it == index.end()) throw Error(ErrorCode::InvalidArgument, "state exceeds the representation's degree cap");
    v(it->second) = c;
  }
  return v;
}

MultiIndexState MultimodeRep::from_vector(const Eigen::VectorXcd& v, double tol) const {
  MultiIndexState out;
  out.modes = modes();
  out.degree_cap = degree_cap;
  for (int j = 0; j < size(); ++j) {
    if (std::abs(v(j)) > tol) out.coefficients.emplace(basis[static_cast<std::size_t>(j)], v(j));
  }
  return out;
}

cplx MultimodeRep::inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const {
  cplx acc{};
  for (int j = 0; j < size(); ++j) acc += std::conj(f(j)) * gram[static_cast<std::size_t>(j)] * g(j);
  return acc;
}

Eigen::VectorXcd MultimodeRep::gauge_apply(const Eigen::VectorXcd& f, double s) const {
  Eigen::VectorXcd out(f.size());
  for (int j = 0; j < size(); ++j) out(j) = std::polar(1.0, s * gauge[static_cast<std::size_t>(j)]) * f(j);
  return out;
}

SpectralSupport spectral_condition_check(const MultimodeRep& rep, const MultiIndexState& f,
                                         const MultiIndexState& g, int nodes, double tol) {
  if (nodes <= rep.degree_cap) {
    throw Error(ErrorCode::AliasingRisk, "need more sample nodes than the degree cap");
  }
  const Eigen::VectorXcd fv = rep.to_vector(f), gv = rep.to_vector(g);
  std::vector<cplx> samples(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    const double s = 2.0 * std::numbers::pi * j / nodes;
    samples[static_cast<std::size_t>(j)] = rep.inner(gv, rep.gauge_apply(fv, s));
  }
  SpectralSupport out;
  for (int k = rep.degree_cap + 1 - nodes; k <= rep.degree_cap; ++k) {
    cplx c{};
    for (int j = 0; j < nodes; ++j) {
      const double s = 2.0 * std::numbers::pi * j / nodes;
      c += std::polar(1.0, -k * s) * samples[static_cast<std::size_t>(j)];
    }
    c /= static_cast<double>(nodes);
    out.coefficients.emplace_back(k, c);
    if (std::abs(c) > tol) out.support.push_back(k);
  }
  return out;
}

VacuumDescent vacuum_descent(const MultimodeRep& rep, const MultiIndexState& f, double tol) {
  Eigen::VectorXcd v = rep.to_vector(f);
  const double norm = v.cwiseAbs().maxCoeff();
  if (norm == 0.0) throw Error(ErrorCode::ZeroInput, "input state is zero");
  const double cut = tol * norm;

  // Lowest nonzero gauge Fourier component f_k = (1/M) sum_j e^{-iks_j} U(s_j) f.
  const int nodes = 4 * (rep.degree_cap + 1);
  VacuumDescent out;
  Eigen::VectorXcd current;
  for (int k = 0; k <= rep.degree_cap; ++k) {
    Eigen::VectorXcd component = Eigen::VectorXcd::Zero(v.size());
    for (int j = 0; j < nodes; ++j) {
      const double s = 2.0 * std::numbers::pi * j / nodes;
      component += std::polar(1.0, -k * s) * rep.gauge_apply(v, s);
    }
    component /= static_cast<double>(nodes);
    if (component.cwiseAbs().maxCoeff() > cut) {
      out.lowest_component = k;
      current = component;
      break;
    }
  }
  if (current.size() == 0) throw Error(ErrorCode::ZeroInput, "no nonzero Fourier component");

  for (;;) {
    bool moved = false;
    for (int i = 0; i < rep.modes(); ++i) {
      Eigen::VectorXcd next = rep.annihilators[static_cast<std::size_t>(i)] * current;
      if (next.cwiseAbs().maxCoeff() > cut) {
        current = std::move(next);
        out.path.push_back(i + 1);
        ++out.steps;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  out.vacuum = rep.from_vector(current, cut);
  return out;
}

}  // namespace holokrein
