#include "doctest.h"

#include <map>

#include "stringcone/cartan.hpp"

using namespace sc;

namespace {
const std::vector<std::pair<char, int>> kTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                                  {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3},
                                                  {'D', 4}, {'G', 2}};
}

TEST_CASE("buildCartan examples") {
  auto a1 = buildCartan('A', 1);
  CHECK(a1.cartan() == std::vector<std::vector<int>>{{2}});
  CHECK(a1.numPositiveRoots() == 1);

  auto a2 = buildCartan('A', 2);
  CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.symmetrizers() == std::vector<int>{1, 1});

  auto g2 = buildCartan('G', 2);
  CHECK(g2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(g2.numPositiveRoots() == 6);
}

TEST_CASE("buildCartan rejects unsupported data") {
  CHECK_THROWS_AS(buildCartan('Z', 9), Error);
  CHECK_THROWS_AS(buildCartan('A', 5), Error);
  CHECK_THROWS_AS(buildCartan('E', 6), Error);
  CHECK_THROWS_AS(buildCartan('G', 3), Error);
  try {
    buildCartan('F', 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
}

TEST_CASE("Cartan invariants for every supported type") {
  // known |positive roots|: A_n n(n+1)/2, B_n/C_n n^2, D4 12, G2 6
  const std::map<std::string, std::size_t> expected = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4},
      {"B3", 9}, {"C2", 4}, {"C3", 9}, {"D4", 12}, {"G2", 6}};
  for (auto [t, r] : kTypes) {
    auto d = buildCartan(t, r);
    CAPTURE(d.label());
    const int n = d.rank();
    for (int i = 0; i < n; ++i) {
      CHECK(d.entry(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(d.entry(i, j) <= 0);
        CHECK((d.entry(i, j) == 0) == (d.entry(j, i) == 0));
        CHECK(d.symmetrizers()[i] * d.entry(i, j) == d.symmetrizers()[j] * d.entry(j, i));
      }
    }
    CHECK(d.numPositiveRoots() == expected.at(d.label()));
    // N equals the length found independently by the anti-dominance descent
    CHECK(longestWord(d).length() == d.numPositiveRoots());
  }
}

TEST_CASE("applyWord examples") {
  auto a1 = buildCartan('A', 1);
  auto a2 = buildCartan('A', 2);
  CHECK(applyWord(a2, WeylWord{}, Weight{{3, 1}}) == Weight{{3, 1}});
  CHECK(applyWord(a1, WeylWord{{1}}, Weight{{5}}) == Weight{{-5}});
  CHECK(applyWord(a2, WeylWord{{1}}, Weight{{1, 0}}) == Weight{{-1, 1}});
  CHECK_THROWS_AS(applyWord(a2, WeylWord{{3}}, Weight{{1, 0}}), Error);
}

TEST_CASE("isReducedWord examples") {
  auto a2 = buildCartan('A', 2);
  CHECK_FALSE(isReducedWord(a2, WeylWord{{1, 1}}));
  CHECK(isReducedWord(a2, WeylWord{{1, 2, 1}}));
  CHECK(isReducedWord(a2, WeylWord{}));
  CHECK(inversionCount(a2, WeylWord{{1, 2, 1}}) == 3);
  CHECK_FALSE(isReducedWord(a2, WeylWord{{1, 2, 1, 2}}));
}

TEST_CASE("longestWord examples") {
  CHECK(longestWord(buildCartan('A', 1)) == WeylWord{{1}});
  CHECK(longestWord(buildCartan('A', 2)) == WeylWord{{1, 2, 1}});
  CHECK(longestWord(buildCartan('B', 2)) == WeylWord{{1, 2, 1, 2}});
}

TEST_CASE("longest word sends rho to -rho for every reduced word") {
  for (auto [t, r] : kTypes) {
    auto d = buildCartan(t, r);
    if (d.numPositiveRoots() > 9) continue;  // keep the braid closure small
    CAPTURE(d.label());
    Weight minus_rho{std::vector<int>(r, -1)};
    for (const auto& w : allReducedWords(d, longestWord(d)))
      CHECK(applyWord(d, w, d.rho()) == minus_rho);
  }
}

TEST_CASE("allReducedWords examples and invariants") {
  auto a1 = buildCartan('A', 1);
  auto a2 = buildCartan('A', 2);
  auto b2 = buildCartan('B', 2);
  CHECK(allReducedWords(a1, longestWord(a1)) == std::vector<WeylWord>{WeylWord{{1}}});
  CHECK(allReducedWords(a2, longestWord(a2)) ==
        std::vector<WeylWord>{WeylWord{{1, 2, 1}}, WeylWord{{2, 1, 2}}});
  CHECK(allReducedWords(b2, longestWord(b2)) ==
        std::vector<WeylWord>{WeylWord{{1, 2, 1, 2}}, WeylWord{{2, 1, 2, 1}}});
  auto g2 = buildCartan('G', 2);
  CHECK(allReducedWords(g2, longestWord(g2)).size() == 2);

  auto a3 = buildCartan('A', 3);
  auto words = allReducedWords(a3, longestWord(a3));
  CHECK(words.size() == 16);
  const auto target = applyWord(a3, longestWord(a3), a3.rho());
  for (const auto& w : words) {
    CHECK(isReducedWord(a3, w));
    CHECK(applyWord(a3, w, a3.rho()) == target);
  }
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK_THROWS_AS(allReducedWords(a3, longestWord(a3), 5), Error);
  CHECK_THROWS_AS(allReducedWords(a2, WeylWord{{1, 1}}), Error);
}

TEST_CASE("adaptedWord examples and prefix property") {
  auto a2 = buildCartan('A', 2);
  CHECK(adaptedWord(a2, WeylWord{{1}}) == WeylWord{{1, 2, 1}});
  CHECK(adaptedWord(a2, longestWord(a2)) == longestWord(a2));
  auto empty = adaptedWord(a2, WeylWord{});
  CHECK(empty.length() == 3);
  CHECK(isReducedWord(a2, empty));

  for (auto [t, r] : kTypes) {
    auto d = buildCartan(t, r);
    if (d.numPositiveRoots() > 9) continue;
    for (const auto& w : weylGroupWords(d)) {
      auto full = adaptedWord(d, w);
      CHECK(full.length() == d.numPositiveRoots());
      CHECK(isReducedWord(d, full));
      WeylWord prefix{{full.letters.begin(),
                       full.letters.begin() + static_cast<std::ptrdiff_t>(w.length())}};
      CHECK(applyWord(d, prefix, d.rho()) == applyWord(d, w, d.rho()));
    }
  }
}

TEST_CASE("weylGroupWords enumerates the group") {
  CHECK(weylGroupWords(buildCartan('A', 2)).size() == 6);
  CHECK(weylGroupWords(buildCartan('B', 2)).size() == 8);
  CHECK(weylGroupWords(buildCartan('G', 2)).size() == 12);
  CHECK(weylGroupWords(buildCartan('A', 3)).size() == 24);
}

TEST_CASE("parseWord") {
  CHECK(parseWord("1,2,1") == WeylWord{{1, 2, 1}});
  CHECK(parseWord("") == WeylWord{});
  CHECK_THROWS_AS(parseWord("1,,2"), Error);
  CHECK_THROWS_AS(parseWord("1,a"), Error);
  CHECK_THROWS_AS(parseWord("1,2,"), Error);
  CHECK(formatWord(WeylWord{{2, 1}}) == "2,1");
}
