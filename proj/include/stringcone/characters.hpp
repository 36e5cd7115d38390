#pragma once

// Independent character oracles: Weyl dimension formula and Demazure
// operators on the group algebra of the weight lattice.

#include <map>
#include <vector>

#include "stringcone/cartan.hpp"

namespace sc {

// Finite sum of c_mu e^mu; zero coefficients are never stored and terms
// iterate in lexicographic order of the weight coordinates.
class WeightPolynomial {
 public:
  WeightPolynomial() = default;
  static WeightPolynomial monomial(const Weight& mu, Int coeff = 1);

  void add(const std::vector<int>& mu, Int coeff);
  Int coefficient(const std::vector<int>& mu) const;
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  WeightPolynomial& operator+=(const WeightPolynomial& other);
  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  std::map<std::vector<int>, Int> terms_;
};

// prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>
Int weylDim(const CartanDatum& datum, const Weight& lambda);

// D_i, extended linearly from its closed form on monomials:
//   m = <mu, alpha_i^vee> >= 0  ->  e^mu + e^{mu - alpha_i} + ... + e^{s_i mu}
//   m = -1                      ->  0
//   m <= -2                     ->  -(e^{mu + alpha_i} + ... + e^{s_i mu - alpha_i})
WeightPolynomial demazureOperator(const CartanDatum& datum, int letter, const WeightPolynomial& f);

// D_{j_1} o ... o D_{j_p} (e^lambda); rejects non-reduced words.
WeightPolynomial demazureCharacter(const CartanDatum& datum, const Weight& lambda,
                                   const WeylWord& w_word);

Int dimensionOf(const WeightPolynomial& f);

}  // namespace sc
