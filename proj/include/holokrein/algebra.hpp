#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "holokrein/error.hpp"
#include "holokrein/exact.hpp"
#include "holokrein/mat2.hpp"

namespace holokrein {

/// One generator symbol. `creator` selects z / a* / a_i* against d / a / a_i;
/// `mode` is 0 for the one-mode algebras and 1..M for multimode ones.
struct Generator {
  bool creator = true;
  int mode = 0;

  // Normal-order key: creators first, then by mode.
  int rank() const { return creator ? 0 : 1; }
  friend bool operator==(const Generator& l, const Generator& r) {
    return l.creator == r.creator && l.mode == r.mode;
  }
  friend bool operator<(const Generator& l, const Generator& r) {
    if (l.rank() != r.rank()) return l.rank() < r.rank();
    return l.mode < r.mode;
  }
};

using Word = std::vector<Generator>;

/// Orders words for storage and printing: longer words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& l, const Word& r) const {
    if (l.size() != r.size()) return l.size() > r.size();
    return l < r;
  }
};

enum class AlgebraKind { Holomorphic, Heisenberg, MultiMode };

/// Generators plus their commutator table. Only [annihilator_i, creator_j] = delta_ij eta_i
/// is nonzero; every other pair commutes.
class GeneratorSet {
 public:
  static GeneratorSet holomorphic() { return GeneratorSet(AlgebraKind::Holomorphic, {}); }
  static GeneratorSet heisenberg() { return GeneratorSet(AlgebraKind::Heisenberg, {}); }
  /// Multimode CCR algebra with [a_i, a_j*] = delta_ij eta_i, modes 1..eta.size().
  static GeneratorSet multimode(std::vector<int> eta);

  AlgebraKind kind() const { return kind_; }
  const std::vector<int>& eta() const { return eta_; }
  int modes() const { return kind_ == AlgebraKind::MultiMode ? static_cast<int>(eta_.size()) : 1; }

  void validate(const Generator& g) const;
  /// [x, y] as an integer multiple of the identity.
  int commutator_value(const Generator& x, const Generator& y) const;
  std::string symbol(const Generator& g) const;

  Generator creator(int mode = 0) const { return {true, mode}; }
  Generator annihilator(int mode = 0) const { return {false, mode}; }

  friend bool operator==(const GeneratorSet& l, const GeneratorSet& r) {
    return l.kind_ == r.kind_ && l.eta_ == r.eta_;
  }
  friend bool operator!=(const GeneratorSet& l, const GeneratorSet& r) { return !(l == r); }

 private:
  GeneratorSet(AlgebraKind kind, std::vector<int> eta) : kind_(kind), eta_(std::move(eta)) {}

  AlgebraKind kind_;
  std::vector<int> eta_;
};

/// Finite linear combination of words over a generator set. Words are stored as
/// written; `normal_order` produces the canonical representative.
template <typename T>
class BasicElement {
 public:
  using Scalar = T;
  using Terms = std::map<Word, T, WordLess>;

  explicit BasicElement(GeneratorSet algebra) : algebra_(std::move(algebra)) {}

  static BasicElement scalar(GeneratorSet algebra, const T& c) {
    BasicElement out(std::move(algebra));
    out.add_term({}, c);
    return out;
  }
  static BasicElement generator(GeneratorSet algebra, const Generator& g, const T& c = T(1)) {
    algebra.validate(g);
    BasicElement out(std::move(algebra));
    out.add_term({g}, c);
    return out;
  }

  const GeneratorSet& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const T& c) {
    if (ScalarTraits<T>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<T>::is_zero(it->second)) terms_.erase(it);
    }
  }

  T coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Highest word length present (0 for scalars and for zero).
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

  BasicElement& operator+=(const BasicElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  BasicElement& operator*=(const T& s) {
    if (ScalarTraits<T>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend BasicElement operator+(BasicElement l, const BasicElement& r) { return l += r; }
  friend BasicElement operator-(BasicElement l, const BasicElement& r) { return l -= r; }
  friend BasicElement operator-(BasicElement x) { return x *= T(-1); }
  friend BasicElement operator*(BasicElement l, const T& s) { return l *= s; }
  friend BasicElement operator*(const T& s, BasicElement r) { return r *= s; }
  /// Concatenation product; no reordering is applied.
  friend BasicElement operator*(const BasicElement& l, const BasicElement& r) {
    l.check_same(r);
    BasicElement out(l.algebra_);
    for (const auto& [wl, cl] : l.terms_) {
      for (const auto& [wr, cr] : r.terms_) {
        Word w = wl;
        w.insert(w.end(), wr.begin(), wr.end());
        out.add_term(w, cl * cr);
      }
    }
    return out;
  }
  friend bool operator==(const BasicElement& l, const BasicElement& r) {
    return l.algebra_ == r.algebra_ && l.terms_ == r.terms_;
  }

  /// Drops terms whose coefficient magnitude is at most `tol` (numeric elements).
  BasicElement pruned(double tol) const {
    BasicElement out(algebra_);
    for (const auto& [w, c] : terms_) {
      if (ScalarTraits<T>::magnitude(c) > tol) out.terms_.emplace(w, c);
    }
    return out;
  }

  void check_same(const BasicElement& o) const {
    if (algebra_ != o.algebra_) {
      throw Error(ErrorCode::IncompatibleAlgebras, "operands belong to different generator sets");
    }
  }

 private:
  GeneratorSet algebra_;
  Terms terms_;
};

using AlgebraElement = BasicElement<ExactComplex>;
using NumericElement = BasicElement<std::complex<double>>;

NumericElement to_numeric(const AlgebraElement& x);

/// Rewrites every word creation-first using the commutator table.
template <typename T>
BasicElement<T> normal_order(const BasicElement<T>& x);

template <typename T>
BasicElement<T> commutator(const BasicElement<T>& x, const BasicElement<T>& y) {
  x.check_same(y);
  return normal_order(x * y - y * x);
}

template <typename T>
BasicElement<T> power(const BasicElement<T>& x, unsigned n) {
  auto out = BasicElement<T>::scalar(x.algebra(), T(1));
  for (unsigned k = 0; k < n; ++k) out = out * x;
  return out;
}

/// Generator-wise substitution into another algebra, extended multiplicatively, then
/// normal-ordered in the target.
template <typename T, typename Image>
BasicElement<T> substitute(const BasicElement<T>& x, const GeneratorSet& target, Image&& image) {
  BasicElement<T> out(target);
  for (const auto& [w, c] : x.terms()) {
    auto term = BasicElement<T>::scalar(target, c);
    for (const auto& g : w) term = term * image(g);
    out += term;
  }
  return normal_order(out);
}

std::string to_string(const AlgebraElement& x);
std::string to_string(const NumericElement& x);

/// Antilinear product-reversing involution of the holomorphic algebra given by
/// (K z, K d)^T = C_K (z, d)^T.
class Involution {
 public:
  explicit Involution(ExactMat2 c_k);

  const ExactMat2& matrix() const { return c_k_; }
  AlgebraElement apply(const AlgebraElement& x) const;

 private:
  ExactMat2 c_k_;
};

inline AlgebraElement apply_involution(const Involution& k, const AlgebraElement& x) {
  return k.apply(x);
}

/// Maps a Heisenberg-algebra element into the holomorphic algebra through
/// (a*, a)^T = V (z, d)^T. V must be unimodular.
AlgebraElement apply_isomorphism(const ExactMat2& v, const AlgebraElement& x);
NumericElement apply_isomorphism(const CMat2& v, const NumericElement& x, double tol = 1e-10);

}  // namespace holokrein

#include "holokrein/detail/algebra_impl.hpp"
