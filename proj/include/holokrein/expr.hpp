#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holokrein/algebra.hpp"
#include "holokrein/error.hpp"
#include "holokrein/exact.hpp"

namespace holokrein {

enum class ExprKind { Rational, ImagUnit, Sqrt2, Symbol, Sum, Product, Power };

enum class SymbolKind { Z, D, A, AStar, AMode, AModeStar };

/// Parsed expression. Parentheses are not kept: a Sum or Product with a single unsigned
/// child collapses to that child, and the printer re-inserts parentheses by precedence.
struct Expr {
  ExprKind kind = ExprKind::Rational;
  Rational value;                // Rational (nonnegative)
  SymbolKind symbol = SymbolKind::Z;
  int mode = 0;                  // AMode / AModeStar
  unsigned exponent = 0;         // Power
  std::vector<Expr> children;    // Sum, Product, Power (base only)
  std::vector<bool> negated;     // Sum: sign of each child

  static Expr rational(Rational v);
  static Expr imag_unit();
  static Expr sqrt2();
  static Expr sym(SymbolKind s, int mode = 0);
  static Expr sum(std::vector<Expr> terms, std::vector<bool> negated);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, unsigned exponent);

  friend bool operator==(const Expr& l, const Expr& r);
};

class ExprParseError : public Error {
 public:
  ExprParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

inline constexpr std::size_t kMaxExprBytes = 64 * 1024;

Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Evaluates the tree in an algebra. Without an explicit generator set the algebra is
/// inferred from the symbols: z/d holomorphic, a/a* Heisenberg, a_i multimode with eta = +1.
AlgebraElement to_element(const Expr& e, std::optional<GeneratorSet> algebra = std::nullopt);
AlgebraElement parse_element(std::string_view text, std::optional<GeneratorSet> algebra = std::nullopt);

}  // namespace holokrein
