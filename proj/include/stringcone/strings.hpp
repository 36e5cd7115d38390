#pragma once

// String parametrization of crystal elements along a reduced word of w0.
//
// Peel order: the FIRST letter of the word peels first. For a word
// (j_1, ..., j_N): t_1 = eps_{j_1}(b), b <- e_{j_1}^{t_1} b, t_2 = eps_{j_2}(b), ...
// A word of w0 is adapted to w when its length-l(w) prefix is a reduced word
// of w; the Demazure crystal of w then has zero string entries past l(w).

#include <compare>
#include <vector>

#include "stringcone/pathcrystal.hpp"

namespace sc {

struct StringVector {
  std::vector<int> entries;

  // Lexicographic, first entry most significant.
  auto operator<=>(const StringVector&) const = default;
};

// A point (lambda, psi) of Z^{n+N}.
struct WeightedPoint {
  Weight lambda;
  StringVector psi;

  IntVec concatenated() const;
  auto operator<=>(const WeightedPoint&) const = default;
};

// Rejects words that are not reduced words of w0.
void checkLongestWord(const CartanDatum& datum, const WeylWord& word);

StringVector stringParam(const CartanDatum& datum, const CrystalGraph& graph, std::size_t node,
                         const WeylWord& word);
// Sorted string image of B(lambda). Throws Error(Internal) if two nodes share
// a string vector or a peel does not end at the highest node.
std::vector<StringVector> stringImage(const CartanDatum& datum, const CrystalGraph& graph,
                                      const WeylWord& word);
std::vector<StringVector> stringImage(const CartanDatum& datum, const Weight& lambda,
                                      const WeylWord& word, std::size_t cap = kDefaultNodeCap);

// lambda - sum_k psi_k alpha_{j_k}
Weight stringWeight(const CartanDatum& datum, const Weight& lambda, const StringVector& psi,
                    const WeylWord& word);

// Dominant weights with every coordinate in [0, bound], lexicographic.
std::vector<Weight> dominantWeightsUpTo(int rank, int bound);

// All (lambda, psi) with lambda in dominantWeightsUpTo(bound), sorted.
std::vector<WeightedPoint> weightedPoints(const CartanDatum& datum, const WeylWord& word,
                                          int level_bound, std::size_t cap = kDefaultNodeCap,
                                          int threads = 1);

std::vector<StringVector> demazureStrings(const CartanDatum& datum, const CrystalGraph& graph,
                                          const WeylWord& w_word, const WeylWord& w0_word);
std::vector<StringVector> demazureStrings(const CartanDatum& datum, const Weight& lambda,
                                          const WeylWord& w_word, const WeylWord& w0_word,
                                          std::size_t cap = kDefaultNodeCap);

}  // namespace sc
