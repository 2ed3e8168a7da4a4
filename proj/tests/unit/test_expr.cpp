#include <catch_amalgamated.hpp>

#include <random>

#include "holokrein/expr.hpp"
#include "support/oracles.hpp"

using namespace holokrein;

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 3 : 6), small(0, 9), count(2, 3), bit(0, 1);
  switch (kind(rng)) {
    case 0: return Expr::rational(Rational(small(rng), 1 + small(rng) % 4));
    case 1: {
      const int s = small(rng) % 6;
      if (s == 5) return small(rng) % 2 ? Expr::imag_unit() : Expr::sqrt2();
      const SymbolKind kinds[] = {SymbolKind::Z, SymbolKind::D, SymbolKind::A, SymbolKind::AStar, SymbolKind::AMode};
      return Expr::sym(kinds[s], 1 + small(rng));
    }
    case 2: return Expr::sym(SymbolKind::AModeStar, 1 + small(rng));
    case 3: return Expr::sym(SymbolKind::Z);
    case 4: {
      std::vector<Expr> terms;
      std::vector<bool> neg;
      const int n = count(rng) - (bit(rng) ? 1 : 0);
      for (int k = 0; k < n; ++k) {
        terms.push_back(random_expr(rng, depth - 1));
        neg.push_back(bit(rng) == 1);
      }
      if (n == 1) neg[0] = true;
      return Expr::sum(std::move(terms), std::move(neg));
    }
    case 5: {
      std::vector<Expr> factors;
      const int n = count(rng);
      for (int k = 0; k < n; ++k) factors.push_back(random_expr(rng, depth - 1));
      return Expr::product(std::move(factors));
    }
    default: return Expr::power(random_expr(rng, depth - 1), static_cast<unsigned>(small(rng)));
  }
}

}  // namespace

TEST_CASE("parse shapes", "[expr]") {
  CHECK(parse_expr("d z") == Expr::product({Expr::sym(SymbolKind::D), Expr::sym(SymbolKind::Z)}));
  CHECK(parse_expr("a_1 a_2*") ==
        Expr::product({Expr::sym(SymbolKind::AMode, 1), Expr::sym(SymbolKind::AModeStar, 2)}));
  const Expr sigma1 = parse_expr("(1/2) (d^2 - z^2)");
  REQUIRE(sigma1.kind == ExprKind::Product);
  CHECK(sigma1.children[0] == Expr::rational(Rational(1, 2)));
  CHECK(sigma1.children[1] == Expr::sum({Expr::power(Expr::sym(SymbolKind::D), 2), Expr::power(Expr::sym(SymbolKind::Z), 2)},
                                        {false, true}));
  // '*' right after a symbol belongs to the symbol; with a space it is a product.
  CHECK(parse_expr("a*z") == Expr::product({Expr::sym(SymbolKind::AStar), Expr::sym(SymbolKind::Z)}));
  CHECK(parse_expr("a * z") == Expr::product({Expr::sym(SymbolKind::A), Expr::sym(SymbolKind::Z)}));
  CHECK(parse_expr("((z))") == Expr::sym(SymbolKind::Z));
}

TEST_CASE("parsed expressions evaluate in the inferred algebra", "[expr]") {
  const AlgebraElement s1 = parse_element("(1/2) (d^2 - z^2)");
  CHECK(s1.algebra() == GeneratorSet::holomorphic());
  CHECK(s1.coefficient({Generator{false, 0}, Generator{false, 0}}) == ExactComplex::rational(1, 2));
  CHECK(parse_element("a_1 a_3*").algebra() == GeneratorSet::multimode({1, 1, 1}));
  CHECK(parse_element("(1 + i) sqrt2").coefficient({}) == ExactComplex(0, 1, 0, 1));
  CHECK_THROWS_AS(parse_element("z a"), Error);
}

TEST_CASE("printer and parser round trip", "[expr]") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Expr e = random_expr(rng, 4);
    const std::string text = print_expr(e);
    INFO(text);
    REQUIRE(parse_expr(text) == e);
  }
}

TEST_CASE("printed normal forms parse back to the same element", "[expr]") {
  for (const char* text : {"(d z)^3", "(1/2 + sqrt2 i) z d^2 - 3 d", "a a* a - i", "a_2 a_1* a_2* + (2/3) a_1"}) {
    const AlgebraElement x = normal_order(parse_element(text));
    CHECK(normal_order(parse_element(to_string(x), x.algebra())) == x);
  }
}

TEST_CASE("syntax errors report offset and expectations", "[expr]") {
  try {
    parse_expr("z + * d");
    FAIL("expected a parse error");
  } catch (const ExprParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.offset() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse_expr("(z + d");
    FAIL("expected a parse error");
  } catch (const ExprParseError& e) {
    CHECK(e.offset() == 6);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "')'") != e.expected().end());
  }
  CHECK_THROWS_AS(parse_expr("z^"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("a_0"), ExprParseError);
  CHECK_THROWS_AS(parse_expr(""), ExprParseError);
  CHECK_THROWS_AS(parse_expr(std::string(70000, 'z')), ExprParseError);
}
