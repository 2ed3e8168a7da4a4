#include <catch_amalgamated.hpp>

#include <random>

#include "holokrein/algebra.hpp"
#include "holokrein/expr.hpp"
#include "support/oracles.hpp"

using namespace holokrein;

namespace {

const GeneratorSet kHolo = GeneratorSet::holomorphic();
const GeneratorSet kHeis = GeneratorSet::heisenberg();

AlgebraElement el(std::string_view text, std::optional<GeneratorSet> alg = std::nullopt) {
  return parse_element(text, std::move(alg));
}

Word random_word(std::mt19937& rng, int max_len, int modes = 0) {
  std::uniform_int_distribution<int> len(0, max_len), bit(0, 1), mode(1, std::max(modes, 1));
  Word w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) w.push_back(Generator{bit(rng) == 1, modes == 0 ? 0 : mode(rng)});
  return w;
}

AlgebraElement random_element(std::mt19937& rng, const GeneratorSet& alg, int terms, int max_len) {
  AlgebraElement x(alg);
  const int modes = alg.kind() == AlgebraKind::MultiMode ? alg.modes() : 0;
  for (int t = 0; t < terms; ++t) x.add_term(random_word(rng, max_len, modes), oracle::random_gaussian_rational(rng, 3));
  return x;
}

}  // namespace

TEST_CASE("defining relation d z = z d + 1", "[algebra]") {
  CHECK(to_string(normal_order(el("d z"))) == "z d + 1");
  CHECK(to_string(normal_order(el("(d z)(d z)"))) == "z^2 d^2 + 3 z d + 1");
}

TEST_CASE("multimode normal ordering with a negative signature", "[algebra]") {
  const auto alg = GeneratorSet::multimode({1, -1});
  CHECK(normal_order(el("a_1 a_2*", alg)) == el("a_2* a_1", alg));
  const auto alg1 = GeneratorSet::multimode({-1});
  CHECK(normal_order(el("a_1 a_1*", alg1)) == el("a_1* a_1 - 1", alg1));
}

TEST_CASE("commutator examples", "[algebra]") {
  CHECK(commutator(el("a"), el("a*")) == AlgebraElement::scalar(kHeis, 1));
  CHECK(commutator(el("z"), el("z")).is_zero());
  CHECK(commutator(el("z d"), el("z")) == el("z"));
  CHECK_THROWS_AS(commutator(el("z"), el("a")), Error);
}

TEST_CASE("normal form acts like the original word on monomials", "[algebra][oracle]") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const AlgebraElement x = random_element(rng, kHolo, 3, 6);
    const AlgebraElement nx = normal_order(x);
    for (const auto& [w, c] : nx.terms()) {
      // Creation-left: no z may follow a d.
      for (std::size_t k = 1; k < w.size(); ++k) REQUIRE_FALSE((w[k].creator && !w[k - 1].creator));
    }
    for (int n = 0; n <= 10; ++n) {
      REQUIRE(oracle::act(x, oracle::monomial(n)) == oracle::act(nx, oracle::monomial(n)));
    }
  }
}

TEST_CASE("normal ordering is idempotent and linear", "[algebra]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraElement x = random_element(rng, kHeis, 3, 5);
    const AlgebraElement y = random_element(rng, kHeis, 3, 5);
    const ExactComplex c = oracle::random_gaussian_rational(rng);
    CHECK(normal_order(normal_order(x)) == normal_order(x));
    CHECK(normal_order(x + c * y) == normal_order(x) + c * normal_order(y));
  }
}

TEST_CASE("normal-ordered products agree with the composed monomial action", "[algebra][oracle]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraElement x = random_element(rng, kHolo, 2, 3);
    const AlgebraElement y = random_element(rng, kHolo, 2, 3);
    const AlgebraElement xy = normal_order(x * y);
    for (int n = 0; n <= 7; ++n) {
      REQUIRE(oracle::act(xy, oracle::monomial(n)) == oracle::act(x, oracle::act(y, oracle::monomial(n))));
    }
  }
}

TEST_CASE("multimode normal form matches the eta-twisted differential action", "[algebra][oracle]") {
  std::mt19937 rng(23);
  const std::vector<int> eta{1, -1, 1};
  const auto alg = GeneratorSet::multimode(eta);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraElement x = random_element(rng, alg, 3, 5);
    const AlgebraElement nx = normal_order(x);
    for (const std::vector<int>& n : {std::vector<int>{0, 0, 0}, {1, 2, 0}, {2, 1, 3}, {0, 3, 1}}) {
      const oracle::MPoly f{{n, ExactComplex(1)}};
      REQUIRE(oracle::act_multimode(x, eta, f) == oracle::act_multimode(nx, eta, f));
    }
  }
}

TEST_CASE("involution with C_K = sigma1", "[algebra]") {
  const Involution k(pauli::sigma1<ExactComplex>());
  CHECK(k.apply(el("z")) == el("d"));
  CHECK(k.apply(el("d z")) == normal_order(el("z d + 1")));
  // Word reversal and swapping z <-> d leave z d in place.
  CHECK(k.apply(el("z d")) == el("z d"));
  CHECK(k.apply(el("i z")) == el("-i d"));
}

TEST_CASE("involution with C_K = sigma3 is antilinear", "[algebra]") {
  const Involution k(pauli::sigma3<ExactComplex>());
  CHECK(k.apply(el("i z")) == el("-i z"));
  CHECK(k.apply(el("d")) == el("-d"));
}

TEST_CASE("involutions square to the identity and reverse products", "[algebra]") {
  std::mt19937 rng(31);
  const std::vector<ExactMat2> cks{pauli::sigma1<ExactComplex>(), pauli::sigma3<ExactComplex>(),
                                   ExactMat2{1, 1, 0, -1}};
  for (const auto& ck : cks) {
    const Involution k(ck);
    for (int trial = 0; trial < 40; ++trial) {
      const AlgebraElement x = random_element(rng, kHolo, 3, 4);
      const AlgebraElement y = random_element(rng, kHolo, 2, 3);
      CHECK(k.apply(k.apply(x)) == normal_order(x));
      CHECK(k.apply(x * y) == normal_order(k.apply(y) * k.apply(x)));
    }
  }
  CHECK_THROWS_AS(Involution(ExactMat2{2, 0, 0, 1}), Error);
}

TEST_CASE("isomorphism images", "[algebra]") {
  CHECK(apply_isomorphism(ExactMat2::identity(), el("a* a")) == el("z d"));
  CHECK(apply_isomorphism(ExactMat2::identity(), commutator(el("a"), el("a*"))) ==
        AlgebraElement::scalar(kHolo, 1));
  // a* = (z - d)/sqrt2, a = (z + d)/sqrt2: a* a = (z^2 - d^2 - 1)/2, the oscillator generator.
  CHECK(apply_isomorphism(schroedinger_matrix_exact(), el("a* a")) == el("(1/2)(z^2 - d^2 - 1)", kHolo));
  CHECK_THROWS_AS(apply_isomorphism(ExactMat2{2, 0, 0, 1}, el("a")), Error);
}

TEST_CASE("unimodular substitutions preserve the CCR", "[algebra]") {
  std::mt19937 rng(41);
  int tested = 0;
  while (tested < 100) {
    const ExactComplex p = oracle::random_gaussian_rational(rng), q = oracle::random_gaussian_rational(rng),
                       r = oracle::random_gaussian_rational(rng);
    if (p.is_zero()) continue;
    // [[p, q], [r, (1 + q r)/p]] has determinant one.
    const ExactMat2 v{p, q, r, (ExactComplex(1) + q * r) * p.inverse()};
    const AlgebraElement image_a = apply_isomorphism(v, el("a"));
    const AlgebraElement image_ad = apply_isomorphism(v, el("a*"));
    REQUIRE(commutator(image_a, image_ad) == AlgebraElement::scalar(kHolo, 1));
    // Homomorphism on a product.
    REQUIRE(apply_isomorphism(v, el("a a* a")) == normal_order(image_a * image_ad * image_a));
    ++tested;
  }
}

TEST_CASE("generator validation", "[algebra]") {
  CHECK_THROWS_AS(AlgebraElement::generator(GeneratorSet::multimode({1}), Generator{true, 2}), Error);
  CHECK_THROWS_AS(GeneratorSet::multimode({1, 0}), Error);
}
