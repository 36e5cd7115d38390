#include "stringcone/characters.hpp"

#include <gmpxx.h>

namespace sc {

WeightPolynomial WeightPolynomial::monomial(const Weight& mu, Int coeff) {
  WeightPolynomial p;
  p.add(mu.coords, coeff);
  return p;
}

void WeightPolynomial::add(const std::vector<int>& mu, Int coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Int WeightPolynomial::coefficient(const std::vector<int>& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& other) {
  for (const auto& [mu, c] : other.terms_) add(mu, c);
  return *this;
}

Int weylDim(const CartanDatum& datum, const Weight& lambda) {
  datum.checkWeight(lambda);
  if (!lambda.dominant())
    reject("characters", "lambda (" + joinInts(lambda.coords) + ") is not dominant");
  // <mu, beta^vee> is proportional to sum_j c_j d_j mu_j for beta = sum_j c_j alpha_j;
  // the common factor cancels in each ratio.
  const auto& d = datum.symmetrizers();
  mpq_class product = 1;
  for (const auto& beta : datum.positiveRoots()) {
    mpz_class num = 0, den = 0;
    for (int j = 0; j < datum.rank(); ++j) {
      num += beta[j] * d[j] * (lambda.coords[j] + 1);
      den += beta[j] * d[j];
    }
    product *= mpq_class(num, den);
  }
  product.canonicalize();
  if (product.get_den() != 1 || !product.get_num().fits_slong_p())
    reject("characters", "Weyl dimension is not a 64-bit integer", ErrorCode::Internal);
  return product.get_num().get_si();
}

WeightPolynomial demazureOperator(const CartanDatum& datum, int letter, const WeightPolynomial& f) {
  if (letter < 1 || letter > datum.rank())
    reject("characters", "letter " + std::to_string(letter) + " out of range");
  const auto alpha = datum.simpleRoot(letter);
  const int n = datum.rank();
  WeightPolynomial out;
  for (const auto& [mu, c] : f.terms()) {
    const int m = mu[letter - 1];
    auto shifted = [&](int k) {  // mu - k * alpha_i
      std::vector<int> v = mu;
      for (int t = 0; t < n; ++t) v[t] -= k * alpha[t];
      return v;
    };
    if (m >= 0) {
      for (int k = 0; k <= m; ++k) out.add(shifted(k), c);
    } else if (m <= -2) {
      for (int k = -1; k >= m + 1; --k) out.add(shifted(k), -c);
    }
  }
  return out;
}

WeightPolynomial demazureCharacter(const CartanDatum& datum, const Weight& lambda,
                                   const WeylWord& w_word) {
  datum.checkWeight(lambda);
  if (!lambda.dominant())
    reject("characters", "lambda (" + joinInts(lambda.coords) + ") is not dominant");
  if (!isReducedWord(datum, w_word))
    reject("characters", "word (" + formatWord(w_word) + ") is not reduced");
  auto f = WeightPolynomial::monomial(lambda);
  for (auto it = w_word.letters.rbegin(); it != w_word.letters.rend(); ++it)
    f = demazureOperator(datum, *it, f);
  return f;
}

Int dimensionOf(const WeightPolynomial& f) {
  Int s = 0;
  for (const auto& [mu, c] : f.terms()) s += c;
  return s;
}

}  // namespace sc
