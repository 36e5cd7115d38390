#include "stringcone/strings.hpp"

#include <algorithm>

namespace sc {

IntVec WeightedPoint::concatenated() const {
  IntVec v(lambda.coords.begin(), lambda.coords.end());
  v.insert(v.end(), psi.entries.begin(), psi.entries.end());
  return v;
}

void checkLongestWord(const CartanDatum& datum, const WeylWord& word) {
  datum.checkWord(word);
  if (word.length() != datum.numPositiveRoots() || !isReducedWord(datum, word))
    reject("strings", "word (" + formatWord(word) + ") is not a reduced word of w0 for " +
                          datum.label());
}

namespace {

// Peel without re-validating the word.
StringVector peel(const CrystalGraph& graph, std::size_t node, const WeylWord& word) {
  StringVector s;
  s.entries.reserve(word.length());
  std::size_t b = node;
  for (int j : word.letters) {
    const int t = graph.epsilon(b, j);
    for (int k = 0; k < t; ++k) b = graph.e(b, j);
    s.entries.push_back(t);
  }
  if (b != graph.highest())
    reject("strings", "peel along (" + formatWord(word) + ") did not reach the highest node",
           ErrorCode::Internal);
  return s;
}

}  // namespace

StringVector stringParam(const CartanDatum& datum, const CrystalGraph& graph, std::size_t node,
                         const WeylWord& word) {
  checkLongestWord(datum, word);
  if (node >= graph.size()) reject("strings", "node " + std::to_string(node) + " not in crystal");
  return peel(graph, node, word);
}

std::vector<StringVector> stringImage(const CartanDatum& datum, const CrystalGraph& graph,
                                      const WeylWord& word) {
  checkLongestWord(datum, word);
  std::vector<StringVector> image;
  image.reserve(graph.size());
  for (std::size_t x = 0; x < graph.size(); ++x) image.push_back(peel(graph, x, word));
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    reject("strings",
           "string map along (" + formatWord(word) + ") is not injective on B(" +
               joinInts(graph.highestWeight().coords) + ")",
           ErrorCode::Internal);
  return image;
}

std::vector<StringVector> stringImage(const CartanDatum& datum, const Weight& lambda,
                                      const WeylWord& word, std::size_t cap) {
  return stringImage(datum, enumerateCrystal(datum, lambda, cap), word);
}

Weight stringWeight(const CartanDatum& datum, const Weight& lambda, const StringVector& psi,
                    const WeylWord& word) {
  datum.checkWeight(lambda);
  if (psi.entries.size() != word.length())
    reject("strings", "string vector length does not match word length");
  Weight w = lambda;
  for (std::size_t k = 0; k < word.length(); ++k) {
    const auto alpha = datum.simpleRoot(word.letters[k]);
    for (int i = 0; i < datum.rank(); ++i) w.coords[i] -= psi.entries[k] * alpha[i];
  }
  return w;
}

std::vector<Weight> dominantWeightsUpTo(int rank, int bound) {
  std::vector<Weight> out;
  if (bound < 0) return out;
  std::vector<int> c(rank, 0);
  while (true) {
    out.push_back(Weight{c});
    int i = rank - 1;
    while (i >= 0 && c[i] == bound) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

std::vector<WeightedPoint> weightedPoints(const CartanDatum& datum, const WeylWord& word,
                                          int level_bound, std::size_t cap, int threads) {
  checkLongestWord(datum, word);
  const auto lambdas = dominantWeightsUpTo(datum.rank(), level_bound);
  std::vector<std::vector<StringVector>> images(lambdas.size());
  parallelFor(lambdas.size(), threads,
              [&](std::size_t k) { images[k] = stringImage(datum, lambdas[k], word, cap); });
  std::vector<WeightedPoint> out;
  for (std::size_t k = 0; k < lambdas.size(); ++k)
    for (auto& psi : images[k]) out.push_back(WeightedPoint{lambdas[k], std::move(psi)});
  return out;
}

std::vector<StringVector> demazureStrings(const CartanDatum& datum, const CrystalGraph& graph,
                                          const WeylWord& w_word, const WeylWord& w0_word) {
  checkLongestWord(datum, w0_word);
  std::vector<StringVector> out;
  for (std::size_t x : demazureCrystal(datum, graph, w_word)) out.push_back(peel(graph, x, w0_word));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StringVector> demazureStrings(const CartanDatum& datum, const Weight& lambda,
                                          const WeylWord& w_word, const WeylWord& w0_word,
                                          std::size_t cap) {
  return demazureStrings(datum, enumerateCrystal(datum, lambda, cap), w_word, w0_word);
}

}  // namespace sc
