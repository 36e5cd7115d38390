#include "doctest.h"

#include <random>

#include "stringcone/characters.hpp"
#include "stringcone/strings.hpp"

using namespace sc;

TEST_CASE("weylDim examples") {
  auto a1 = buildCartan('A', 1);
  auto a2 = buildCartan('A', 2);
  for (int m = 0; m < 6; ++m) CHECK(weylDim(a1, Weight{{m}}) == m + 1);
  CHECK(weylDim(a2, Weight{{1, 0}}) == 3);
  CHECK(weylDim(a2, Weight{{1, 1}}) == 8);
  // classical dimensions: B2 spin 4, vector 5; G2 7, 14; D4 vector 8, adjoint 28
  CHECK(weylDim(buildCartan('B', 2), Weight{{0, 1}}) == 4);
  CHECK(weylDim(buildCartan('B', 2), Weight{{1, 0}}) == 5);
  CHECK(weylDim(buildCartan('G', 2), Weight{{0, 1}}) == 7);
  CHECK(weylDim(buildCartan('G', 2), Weight{{1, 0}}) == 14);
  CHECK(weylDim(buildCartan('D', 4), Weight{{1, 0, 0, 0}}) == 8);
  CHECK(weylDim(buildCartan('D', 4), Weight{{0, 1, 0, 0}}) == 28);
  CHECK_THROWS_AS(weylDim(a2, Weight{{-1, 0}}), Error);
}

TEST_CASE("demazureOperator closed form") {
  auto a1 = buildCartan('A', 1);
  auto a2 = buildCartan('A', 2);
  auto zero = WeightPolynomial::monomial(Weight{{0, 0}});
  CHECK(demazureOperator(a2, 1, zero) == zero);
  CHECK(demazureOperator(a2, 1, WeightPolynomial::monomial(Weight{{-1, 3}})).empty());

  WeightPolynomial expected;
  expected.add({2}, 1);
  expected.add({0}, 1);
  expected.add({-2}, 1);
  CHECK(demazureOperator(a1, 1, WeightPolynomial::monomial(Weight{{2}})) == expected);

  // m = -3 gives -(e^{mu+alpha} + e^{mu+2alpha})
  WeightPolynomial neg;
  neg.add({-1}, -1);
  neg.add({1}, -1);
  CHECK(demazureOperator(a1, 1, WeightPolynomial::monomial(Weight{{-3}})) == neg);
}

TEST_CASE("demazureCharacter examples") {
  auto a2 = buildCartan('A', 2);
  Weight w1{{1, 0}};
  CHECK(demazureCharacter(a2, w1, WeylWord{}) == WeightPolynomial::monomial(w1));
  auto full = demazureCharacter(a2, w1, longestWord(a2));
  CHECK(full.terms() == std::map<std::vector<int>, Int>{{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}});
  auto part = demazureCharacter(a2, w1, WeylWord{{1}});
  CHECK(part.terms() == std::map<std::vector<int>, Int>{{{1, 0}, 1}, {{-1, 1}, 1}});
  CHECK(dimensionOf(part) == 2);
  CHECK_THROWS_AS(demazureCharacter(a2, w1, WeylWord{{1, 1}}), Error);
}

TEST_CASE("dimensionOf") {
  auto a2 = buildCartan('A', 2);
  CHECK(dimensionOf(WeightPolynomial::monomial(Weight{{4, 1}})) == 1);
  CHECK(dimensionOf(demazureCharacter(a2, Weight{{1, 1}}, longestWord(a2))) == 8);
  CHECK(dimensionOf(WeightPolynomial{}) == 0);
}

TEST_CASE("Weyl character is word independent and matches weylDim") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    auto d = buildCartan(t, r);
    for (const auto& lambda : dominantWeightsUpTo(r, 2)) {
      auto words = allReducedWords(d, longestWord(d));
      auto ref = demazureCharacter(d, lambda, words.front());
      CHECK(dimensionOf(ref) == weylDim(d, lambda));
      for (const auto& w : words) CHECK(demazureCharacter(d, lambda, w) == ref);
    }
  }
}

TEST_CASE("Demazure characters of dominant weights have nonnegative coefficients") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto d = buildCartan(t, r);
    for (const auto& w : weylGroupWords(d))
      for (const auto& lambda : dominantWeightsUpTo(r, 2)) {
        const auto chi = demazureCharacter(d, lambda, w);
        for (const auto& [mu, c] : chi.terms()) CHECK(c > 0);
      }
  }
}

TEST_CASE("D_i is idempotent on random polynomials") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coord(-4, 4), coeff(-3, 3), terms(1, 6);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    auto d = buildCartan(t, r);
    for (int trial = 0; trial < 100; ++trial) {
      WeightPolynomial f;
      const int k = terms(rng);
      for (int j = 0; j < k; ++j) {
        std::vector<int> mu(r);
        for (auto& x : mu) x = coord(rng);
        f.add(mu, coeff(rng));
      }
      for (int i = 1; i <= r; ++i) {
        auto once = demazureOperator(d, i, f);
        CHECK(demazureOperator(d, i, once) == once);
      }
    }
  }
}
