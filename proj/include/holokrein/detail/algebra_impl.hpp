#pragma once

#include <algorithm>

namespace holokrein {

template <typename T>
BasicElement<T> normal_order(const BasicElement<T>& x) {
  const GeneratorSet& algebra = x.algebra();
  BasicElement<T> out(algebra);
  // Pending words keyed by WordLess: longest first, so contraction products (shorter
  // words) are always visited after every word that could still produce them.
  std::map<Word, T, WordLess> pending(x.terms().begin(), x.terms().end());

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word w = std::move(node.key());
    T c = std::move(node.mapped());
    if (ScalarTraits<T>::is_zero(c)) continue;

    auto bad = std::adjacent_find(w.begin(), w.end(),
                                  [](const Generator& l, const Generator& r) { return r < l; });
    if (bad == w.end()) {
      out.add_term(w, c);
      continue;
    }
    const std::size_t i = static_cast<std::size_t>(bad - w.begin());
    // xy = yx + [x, y]
    const int comm = algebra.commutator_value(w[i], w[i + 1]);
    if (comm != 0) {
      Word contracted;
      contracted.reserve(w.size() - 2);
      contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
      contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      T cc = c * ScalarTraits<T>::from_int(comm);
      auto [it, inserted] = pending.try_emplace(std::move(contracted), cc);
      if (!inserted) it->second += cc;
    }
    std::swap(w[i], w[i + 1]);
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) it->second += c;
  }
  return out;
}

}  // namespace holokrein
