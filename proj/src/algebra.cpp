#include "holokrein/algebra.hpp"

#include <cstdio>
#include <sstream>

namespace holokrein {

GeneratorSet GeneratorSet::multimode(std::vector<int> eta) {
  if (eta.empty()) throw Error(ErrorCode::InvalidArgument, "multimode algebra needs at least one mode");
  for (int e : eta) {
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "eta entries must be +1 or -1");
  }
  return GeneratorSet(AlgebraKind::MultiMode, std::move(eta));
}

void GeneratorSet::validate(const Generator& g) const {
  if (kind_ == AlgebraKind::MultiMode) {
    if (g.mode < 1 || g.mode > static_cast<int>(eta_.size())) {
      throw Error(ErrorCode::UnknownGenerator, "mode index " + std::to_string(g.mode) + " outside 1.." +
                                                   std::to_string(eta_.size()));
    }
  } else if (g.mode != 0) {
    throw Error(ErrorCode::UnknownGenerator, "one-mode algebra has no indexed generators");
  }
}

int GeneratorSet::commutator_value(const Generator& x, const Generator& y) const {
  if (x.mode != y.mode || x.creator == y.creator) return 0;
  const int eta = kind_ == AlgebraKind::MultiMode ? eta_.at(static_cast<std::size_t>(x.mode - 1)) : 1;
  return x.creator ? -eta : eta;
}

std::string GeneratorSet::symbol(const Generator& g) const {
  switch (kind_) {
    case AlgebraKind::Holomorphic: return g.creator ? "z" : "d";
    case AlgebraKind::Heisenberg: return g.creator ? "a*" : "a";
    case AlgebraKind::MultiMode: return "a_" + std::to_string(g.mode) + (g.creator ? "*" : "");
  }
  return "?";
}

NumericElement to_numeric(const AlgebraElement& x) {
  NumericElement out(x.algebra());
  for (const auto& [w, c] : x.terms()) out.add_term(w, c.to_complex());
  return out;
}

namespace {

std::string word_str(const GeneratorSet& algebra, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += " ";
    out += algebra.symbol(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Splits a coefficient rendering into (negative?, magnitude text, grouped?).
struct CoeffText {
  bool negative;
  std::string text;
  bool grouped;
};

CoeffText coeff_text(const ExactComplex& c) {
  bool grouped = false;
  std::string s = c.str(&grouped);
  if (!grouped && !s.empty() && s[0] == '-') return {true, s.substr(1), false};
  return {false, s, grouped};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CoeffText coeff_text(const std::complex<double>& c) {
  if (c.imag() == 0.0) {
    return {c.real() < 0, format_double(std::abs(c.real())), false};
  }
  if (c.real() == 0.0) {
    return {c.imag() < 0, format_double(std::abs(c.imag())) + " i", false};
  }
  return {false, format_double(c.real()) + (c.imag() < 0 ? " - " : " + ") + format_double(std::abs(c.imag())) + " i",
          true};
}

bool is_unit(const CoeffText& t) { return t.text == "1"; }

template <typename T>
std::string element_str(const BasicElement<T>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    CoeffText ct = coeff_text(c);
    if (first) {
      if (ct.negative) out += "-";
    } else {
      out += ct.negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += ct.grouped ? "(" + ct.text + ")" : ct.text;
      continue;
    }
    if (!is_unit(ct)) out += (ct.grouped ? "(" + ct.text + ")" : ct.text) + " ";
    out += word_str(x.algebra(), w);
  }
  return out;
}

void require_holomorphic(const GeneratorSet& s) {
  if (s.kind() != AlgebraKind::Holomorphic) {
    throw Error(ErrorCode::IncompatibleAlgebras, "expected an element of the holomorphic algebra");
  }
}

void require_heisenberg(const GeneratorSet& s) {
  if (s.kind() != AlgebraKind::Heisenberg) {
    throw Error(ErrorCode::IncompatibleAlgebras, "expected an element of the Heisenberg algebra");
  }
}

}  // namespace

std::string to_string(const AlgebraElement& x) { return element_str(x); }
std::string to_string(const NumericElement& x) { return element_str(x); }

Involution::Involution(ExactMat2 c_k) : c_k_(std::move(c_k)) {
  if (!(c_k_.conj() * c_k_ == ExactMat2::identity())) {
    throw Error(ErrorCode::InvalidArgument, "C_K must satisfy conj(C_K) C_K = 1");
  }
}

AlgebraElement Involution::apply(const AlgebraElement& x) const {
  require_holomorphic(x.algebra());
  const GeneratorSet holo = GeneratorSet::holomorphic();
  const Generator z = holo.creator(), d = holo.annihilator();
  auto image = [&](const Generator& g) {
    const int row = g.creator ? 0 : 1;
    return AlgebraElement::generator(holo, z, c_k_(row, 0)) + AlgebraElement::generator(holo, d, c_k_(row, 1));
  };
  AlgebraElement out(holo);
  for (const auto& [w, c] : x.terms()) {
    auto term = AlgebraElement::scalar(holo, c.conj());
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * image(*it);
    out += term;
  }
  return normal_order(out);
}

namespace {

template <typename T>
BasicElement<T> isomorphism_impl(const Mat2<T>& v, const BasicElement<T>& x) {
  require_heisenberg(x.algebra());
  const GeneratorSet holo = GeneratorSet::holomorphic();
  const Generator z = holo.creator(), d = holo.annihilator();
  return substitute(x, holo, [&](const Generator& g) {
    const int row = g.creator ? 0 : 1;  // (a*, a)^T = V (z, d)^T
    return BasicElement<T>::generator(holo, z, v(row, 0)) + BasicElement<T>::generator(holo, d, v(row, 1));
  });
}

}  // namespace

AlgebraElement apply_isomorphism(const ExactMat2& v, const AlgebraElement& x) {
  if (v.det() != ExactComplex(1)) throw Error(ErrorCode::NotUnimodular, "det V must equal 1");
  return isomorphism_impl(v, x);
}

NumericElement apply_isomorphism(const CMat2& v, const NumericElement& x, double tol) {
  if (std::abs(v.det() - 1.0) > tol) throw Error(ErrorCode::NotUnimodular, "det V must equal 1");
  return isomorphism_impl(v, x);
}

}  // namespace holokrein
