#pragma once

// Test-only oracle: the type A_n crystal of semistandard tableaux, acting on
// row reading words (bottom row first) by the bracketing rule. Shares no code
// with the path model.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace oracle {

struct TableauCrystal {
  int n = 0;                                   // rank; letters are 1..n+1
  std::vector<std::vector<int>> words;         // node -> reading word
  std::map<std::vector<int>, std::size_t> id;  // reading word -> node

  // positions of unmatched i ("+", movable up) and i+1 ("-", movable down)
  static void unmatched(const std::vector<int>& w, int i, std::vector<std::size_t>& plus,
                        std::vector<std::size_t>& minus) {
    plus.clear();
    minus.clear();
    // i acts as ')' and i+1 as '('; a '(' followed later by ')' cancels
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == i + 1) {
        open.push_back(k);
      } else if (w[k] == i) {
        if (!open.empty())
          open.pop_back();
        else
          plus.push_back(k);
      }
    }
    minus = open;
  }

  static bool applyF(std::vector<int>& w, int i) {
    std::vector<std::size_t> plus, minus;
    unmatched(w, i, plus, minus);
    if (plus.empty()) return false;
    w[plus.back()] = i + 1;
    return true;
  }

  static bool applyE(std::vector<int>& w, int i) {
    std::vector<std::size_t> plus, minus;
    unmatched(w, i, plus, minus);
    if (minus.empty()) return false;
    w[minus.front()] = i;
    return true;
  }

  static int epsilon(const std::vector<int>& w, int i) {
    std::vector<std::size_t> plus, minus;
    unmatched(w, i, plus, minus);
    return static_cast<int>(minus.size());
  }

  // fundamental coordinates lambda -> partition -> highest tableau reading word
  static TableauCrystal build(int n, const std::vector<int>& lambda) {
    std::vector<int> rows(n, 0);  // row lengths
    for (int r = 0; r < n; ++r)
      for (int j = r; j < n; ++j) rows[r] += lambda[j];
    std::vector<int> word;
    for (int r = n - 1; r >= 0; --r)
      for (int c = 0; c < rows[r]; ++c) word.push_back(r + 1);
    TableauCrystal t;
    t.n = n;
    t.words.push_back(word);
    t.id.emplace(word, 0);
    for (std::size_t x = 0; x < t.words.size(); ++x) {
      for (int i = 1; i <= n; ++i) {
        auto w = t.words[x];
        if (!applyF(w, i)) continue;
        if (t.id.emplace(w, t.words.size()).second) t.words.push_back(w);
      }
    }
    return t;
  }

  std::vector<int> stringOf(std::vector<int> w, const std::vector<int>& word) const {
    std::vector<int> s;
    for (int j : word) {
      int t = epsilon(w, j);
      for (int k = 0; k < t; ++k) applyE(w, j);
      s.push_back(t);
    }
    return s;
  }

  std::vector<std::vector<int>> stringImage(const std::vector<int>& word) const {
    std::vector<std::vector<int>> out;
    for (const auto& w : words) out.push_back(stringOf(w, word));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> weight(const std::vector<int>& w) const {
    std::vector<int> content(n + 2, 0);
    for (int x : w) ++content[x];
    std::vector<int> mu(n);
    for (int i = 1; i <= n; ++i) mu[i - 1] = content[i] - content[i + 1];
    return mu;
  }
};

}  // namespace oracle
