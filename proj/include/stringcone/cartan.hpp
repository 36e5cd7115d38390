#pragma once

// Root data and Weyl group combinatorics for the finite types A, B, C, D, G.
//
// Conventions:
//  - cartan()[i][j] = <alpha_i^vee, alpha_j>, so column j of the Cartan matrix
//    is the simple root alpha_j written in fundamental-weight coordinates.
//  - symmetrizers d satisfy d_i * a_ij = d_j * a_ji.
//  - Words use 1-based letters. The word (j_1, ..., j_k) denotes the product
//    s_{j_1} ... s_{j_k}; acting on a weight, the last letter applies first.
//
//   type  Cartan matrix                   d
//   A_n   tridiagonal 2/-1                (1,...,1)
//   B2    [[2,-1],[-2,2]]                  (2,1)      alpha_2 short
//   B3    [[2,-1,0],[-1,2,-1],[0,-2,2]]    (2,2,1)
//   C2    [[2,-2],[-1,2]]                  (1,2)      alpha_2 long
//   C3    [[2,-1,0],[-1,2,-2],[0,-1,2]]    (1,1,2)
//   D4    node 2 joined to 1, 3, 4         (1,1,1,1)
//   G2    [[2,-1],[-3,2]]                  (3,1)      alpha_1 long

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "stringcone/common.hpp"

namespace sc {

// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  bool dominant() const;
  std::size_t rank() const { return coords.size(); }
  auto operator<=>(const Weight&) const = default;
};

struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const WeylWord&) const = default;
};

std::string formatWord(const WeylWord& word);
// Parses "1,2,1" (empty string -> empty word). Throws on malformed input.
WeylWord parseWord(const std::string& text);

class CartanDatum {
 public:
  CartanDatum(char type, int rank, std::vector<std::vector<int>> cartan, std::vector<int> d);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int entry(int i, int j) const { return cartan_[i][j]; }  // 0-based
  const std::vector<int>& symmetrizers() const { return d_; }
  // Positive roots in the simple-root basis, sorted by height then lexicographically.
  const std::vector<std::vector<int>>& positiveRoots() const { return roots_; }
  std::size_t numPositiveRoots() const { return roots_.size(); }

  // alpha_i in fundamental coordinates (1-based letter).
  std::vector<int> simpleRoot(int letter) const;
  // rho = sum of fundamental weights.
  Weight rho() const;
  // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
  Weight reflect(int letter, const Weight& mu) const;
  // Simple reflection of a vector given in the simple-root basis.
  std::vector<int> reflectRoot(int letter, std::vector<int> beta) const;
  // Converts a simple-root-basis vector to fundamental coordinates.
  Weight rootToWeight(const std::vector<int>& beta) const;
  // Throws when a letter is out of 1..rank.
  void checkWord(const WeylWord& word) const;
  void checkWeight(const Weight& mu) const;

 private:
  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<int>> roots_;
};

// Supported: A1-A4, B2-B3, C2-C3, D4, G2.
CartanDatum buildCartan(char type, int rank);

Weight applyWord(const CartanDatum& datum, const WeylWord& word, const Weight& mu);
// Number of positive roots sent to negative roots by the element of the word.
std::size_t inversionCount(const CartanDatum& datum, const WeylWord& word);
bool isReducedWord(const CartanDatum& datum, const WeylWord& word);
// Reduced word of w0, built by reflecting -rho towards the dominant chamber
// (smallest available letter first).
WeylWord longestWord(const CartanDatum& datum);
// All reduced words of the element, closed under braid moves, sorted.
// Throws Error(CapExceeded) when more than `cap` words are found.
std::vector<WeylWord> allReducedWords(const CartanDatum& datum, const WeylWord& word,
                                      std::size_t cap = 100000);
// Reduced word of w0 whose prefix is `w_word`.
WeylWord adaptedWord(const CartanDatum& datum, const WeylWord& w_word);
// One reduced word per Weyl group element, ordered by length then lexicographically.
std::vector<WeylWord> weylGroupWords(const CartanDatum& datum);
// Braid order m_ij for i != j (1-based letters).
int braidOrder(const CartanDatum& datum, int i, int j);

}  // namespace sc
