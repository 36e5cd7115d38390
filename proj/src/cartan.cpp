#include "stringcone/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace sc {

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

std::string formatWord(const WeylWord& word) { return joinInts(word.letters); }

WeylWord parseWord(const std::string& text) {
  WeylWord w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      reject("config", "malformed word '" + text + "'");
    if (item.size() > 3) reject("config", "letter out of range in word '" + text + "'");
    w.letters.push_back(std::stoi(item));
  }
  if (!text.empty() && text.back() == ',') reject("config", "malformed word '" + text + "'");
  return w;
}

namespace {

bool isNonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::vector<std::vector<int>> computePositiveRoots(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += a[i][j] * beta[j];
      auto image = beta;
      image[i] -= c;
      if (isNonnegative(image) && seen.insert(image).second) queue.push_back(image);
    }
  }
  std::vector<std::vector<int>> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    return hx != hy ? hx < hy : x < y;
  });
  return roots;
}

}  // namespace

CartanDatum::CartanDatum(char type, int rank, std::vector<std::vector<int>> cartan,
                         std::vector<int> d)
    : type_(type), rank_(rank), cartan_(std::move(cartan)), d_(std::move(d)) {
  roots_ = computePositiveRoots(cartan_);
}

std::vector<int> CartanDatum::simpleRoot(int letter) const {
  std::vector<int> col(rank_);
  for (int i = 0; i < rank_; ++i) col[i] = cartan_[i][letter - 1];
  return col;
}

Weight CartanDatum::rho() const { return Weight{std::vector<int>(rank_, 1)}; }

Weight CartanDatum::reflect(int letter, const Weight& mu) const {
  Weight out = mu;
  const int m = mu.coords[letter - 1];
  if (m == 0) return out;
  for (int i = 0; i < rank_; ++i) out.coords[i] -= m * cartan_[i][letter - 1];
  return out;
}

std::vector<int> CartanDatum::reflectRoot(int letter, std::vector<int> beta) const {
  const int i = letter - 1;
  int c = 0;
  for (int j = 0; j < rank_; ++j) c += cartan_[i][j] * beta[j];
  beta[i] -= c;
  return beta;
}

Weight CartanDatum::rootToWeight(const std::vector<int>& beta) const {
  Weight w{std::vector<int>(rank_, 0)};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[i] += cartan_[i][j] * beta[j];
  return w;
}

void CartanDatum::checkWord(const WeylWord& word) const {
  for (int l : word.letters)
    if (l < 1 || l > rank_)
      reject("cartan", "letter " + std::to_string(l) + " out of range 1.." +
                           std::to_string(rank_) + " for " + label());
}

void CartanDatum::checkWeight(const Weight& mu) const {
  if (static_cast<int>(mu.coords.size()) != rank_)
    reject("cartan", "weight (" + joinInts(mu.coords) + ") has wrong length for " + label());
}

CartanDatum buildCartan(char type, int rank) {
  auto unsupported = [&] {
    reject("cartan",
           std::string("unsupported root system ") + type + std::to_string(rank) +
               " (supported: A1-A4, B2-B3, C2-C3, D4, G2)",
           ErrorCode::Unsupported);
  };
  std::vector<std::vector<int>> a(std::max(rank, 0), std::vector<int>(std::max(rank, 0), 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  std::vector<int> d(std::max(rank, 0), 1);
  switch (type) {
    case 'A':
      if (rank < 1 || rank > 4) unsupported();
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':
      if (rank < 2 || rank > 3) unsupported();
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      a[rank - 1][rank - 2] = -2;
      for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
      break;
    case 'C':
      if (rank < 2 || rank > 3) unsupported();
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      d[rank - 1] = 2;
      break;
    case 'D':
      if (rank != 4) unsupported();
      link(0, 1);
      link(1, 2);
      link(1, 3);
      break;
    case 'G':
      if (rank != 2) unsupported();
      a[0][1] = -1;
      a[1][0] = -3;
      d = {3, 1};
      break;
    default:
      unsupported();
  }
  return CartanDatum(type, rank, std::move(a), std::move(d));
}

Weight applyWord(const CartanDatum& datum, const WeylWord& word, const Weight& mu) {
  datum.checkWord(word);
  datum.checkWeight(mu);
  Weight out = mu;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = datum.reflect(*it, out);
  return out;
}

std::size_t inversionCount(const CartanDatum& datum, const WeylWord& word) {
  datum.checkWord(word);
  std::size_t count = 0;
  for (const auto& beta : datum.positiveRoots()) {
    auto image = beta;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      image = datum.reflectRoot(*it, std::move(image));
    if (!isNonnegative(image)) ++count;
  }
  return count;
}

bool isReducedWord(const CartanDatum& datum, const WeylWord& word) {
  return inversionCount(datum, word) == word.length();
}

WeylWord longestWord(const CartanDatum& datum) {
  Weight mu{std::vector<int>(datum.rank(), -1)};
  WeylWord word;
  while (true) {
    auto it = std::find_if(mu.coords.begin(), mu.coords.end(), [](int c) { return c < 0; });
    if (it == mu.coords.end()) break;
    const int letter = static_cast<int>(it - mu.coords.begin()) + 1;
    mu = datum.reflect(letter, mu);
    word.letters.push_back(letter);
  }
  return word;
}

int braidOrder(const CartanDatum& datum, int i, int j) {
  switch (datum.entry(i - 1, j - 1) * datum.entry(j - 1, i - 1)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: reject("cartan", "unexpected Cartan product", ErrorCode::Internal);
  }
}

std::vector<WeylWord> allReducedWords(const CartanDatum& datum, const WeylWord& word,
                                      std::size_t cap) {
  if (!isReducedWord(datum, word))
    reject("cartan", "word (" + formatWord(word) + ") is not reduced");
  const int n = datum.rank();
  std::set<std::vector<int>> seen{word.letters};
  std::deque<std::vector<int>> queue{word.letters};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const int m = braidOrder(datum, i, j);
        if (static_cast<std::size_t>(m) > cur.size()) continue;
        for (std::size_t p = 0; p + m <= cur.size(); ++p) {
          bool match = true;
          for (int k = 0; k < m && match; ++k) match = cur[p + k] == (k % 2 == 0 ? i : j);
          if (!match) continue;
          auto next = cur;
          for (int k = 0; k < m; ++k) next[p + k] = (k % 2 == 0 ? j : i);
          if (seen.insert(next).second) {
            if (seen.size() > cap)
              reject("cartan",
                     "more than " + std::to_string(cap) + " reduced words for (" +
                         formatWord(word) + ")",
                     ErrorCode::CapExceeded);
            queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  std::vector<WeylWord> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(WeylWord{w});
  return out;
}

WeylWord adaptedWord(const CartanDatum& datum, const WeylWord& w_word) {
  if (!isReducedWord(datum, w_word))
    reject("cartan", "word (" + formatWord(w_word) + ") is not reduced");
  WeylWord out = w_word;
  const std::size_t target = datum.numPositiveRoots();
  while (out.length() < target) {
    bool extended = false;
    for (int j = 1; j <= datum.rank() && !extended; ++j) {
      out.letters.push_back(j);
      if (isReducedWord(datum, out))
        extended = true;
      else
        out.letters.pop_back();
    }
    if (!extended) reject("cartan", "no reduced extension found", ErrorCode::Internal);
  }
  return out;
}

std::vector<WeylWord> weylGroupWords(const CartanDatum& datum) {
  // rho is regular, so an element is determined by its image of rho.
  std::map<std::vector<int>, WeylWord> found;
  std::vector<WeylWord> level{WeylWord{}};
  found.emplace(datum.rho().coords, WeylWord{});
  while (!level.empty()) {
    std::vector<WeylWord> next;
    for (const auto& w : level) {
      for (int j = 1; j <= datum.rank(); ++j) {
        WeylWord ext = w;
        ext.letters.push_back(j);
        if (!isReducedWord(datum, ext)) continue;
        auto key = applyWord(datum, ext, datum.rho()).coords;
        if (found.emplace(key, ext).second) next.push_back(ext);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<WeylWord> out;
  for (auto& [key, w] : found) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const WeylWord& x, const WeylWord& y) {
    return x.length() != y.length() ? x.length() < y.length() : x.letters < y.letters;
  });
  return out;
}

}  // namespace sc
