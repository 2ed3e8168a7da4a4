#include <catch_amalgamated.hpp>

#include <random>

#include "holokrein/exact.hpp"
#include "support/oracles.hpp"

using holokrein::ExactComplex;
using holokrein::Rational;

TEST_CASE("sqrt2 and i satisfy their defining equations", "[exact]") {
  CHECK(ExactComplex::sqrt2() * ExactComplex::sqrt2() == ExactComplex(2));
  CHECK(ExactComplex::i() * ExactComplex::i() == ExactComplex(-1));
  const ExactComplex w = ExactComplex::i() * ExactComplex::sqrt2();
  CHECK(w * w == ExactComplex(-2));
}

TEST_CASE("inverse is a two-sided inverse on random field elements", "[exact]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (int k = 0; k < 200; ++k) {
    const ExactComplex x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                         Rational(num(rng), den(rng)));
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == ExactComplex(1));
    CHECK(x.inverse() * x == ExactComplex(1));
  }
  CHECK_THROWS_AS(ExactComplex().inverse(), holokrein::Error);
}

TEST_CASE("conjugation is multiplicative and matches the double value", "[exact]") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    const ExactComplex x = oracle::random_gaussian_rational(rng) + ExactComplex::sqrt2() * oracle::random_gaussian_rational(rng);
    const ExactComplex y = oracle::random_gaussian_rational(rng);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(std::abs(x.conj().to_complex() - std::conj(x.to_complex())) < 1e-12);
  }
}

TEST_CASE("string form of field elements", "[exact]") {
  CHECK(ExactComplex(3).str() == "3");
  CHECK(ExactComplex::rational(-1, 2).str() == "-1/2");
  CHECK(ExactComplex::i().str() == "i");
  CHECK(ExactComplex::sqrt2().str() == "sqrt2");
  bool group = false;
  (ExactComplex(1) + ExactComplex::i()).str(&group);
  CHECK(group);
}
