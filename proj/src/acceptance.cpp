#include "stringcone/acceptance.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "stringcone/characters.hpp"
#include "stringcone/degeneration.hpp"

namespace sc::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Case {
  CartanDatum datum;
  std::vector<WeylWord> words;
};

// every reduced word of w0, or four spread-out ones when there are many
std::vector<WeylWord> wordSample(const CartanDatum& d, bool all) {
  auto words = allReducedWords(d, longestWord(d));
  if (all || words.size() <= 4) return words;
  std::vector<WeylWord> out;
  const std::size_t n = words.size();
  for (std::size_t k = 0; k < 4; ++k) out.push_back(words[k * (n - 1) / 3]);
  return out;
}

std::vector<Case> stringCases() {
  std::vector<Case> out;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'A', 3}, {'G', 2}}) {
    auto d = buildCartan(t, r);
    const bool all = !(t == 'A' && r == 3);
    out.push_back({d, wordSample(d, all)});
  }
  return out;
}

bool heavy(const CartanDatum& d) { return d.label() == "A3" || d.label() == "G2"; }

std::string plural(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

Result stringCounts(const Options& options) {
  Result r{1, "string-count identity", true, ""};
  std::size_t checked = 0, bad = 0;
  bool in_time = true;
  for (const auto& c : stringCases()) {
    const auto t0 = Clock::now();
    const auto lambdas = dominantWeightsUpTo(c.datum.rank(), 2);
    std::vector<std::size_t> fails(lambdas.size(), 0), counts(lambdas.size(), 0);
    parallelFor(lambdas.size(), options.threads, [&](std::size_t i) {
      const auto g = enumerateCrystal(c.datum, lambdas[i]);
      const Int dim = weylDim(c.datum, lambdas[i]);
      for (const auto& w : c.words) {
        ++counts[i];
        try {
          const auto image = stringImage(c.datum, g, w);
          if (image.size() != g.size() || static_cast<Int>(g.size()) != dim) ++fails[i];
        } catch (const Error&) {
          ++fails[i];
        }
      }
    });
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      checked += counts[i];
      bad += fails[i];
    }
    if (heavy(c.datum) && secondsSince(t0) >= 60.0) in_time = false;
  }
  r.passed = bad == 0 && in_time;
  r.detail = plural(checked, "(word, lambda) cases") + ", " + plural(bad, "mismatches") +
             (in_time ? ", A3 and G2 within 60 s" : ", A3 or G2 exceeded 60 s");
  return r;
}

Result injectivity(const Options& options) {
  Result r{2, "injectivity and full peel", true, ""};
  std::size_t nodes = 0, collisions = 0, failed = 0;
  for (const auto& c : stringCases()) {
    const auto lambdas = dominantWeightsUpTo(c.datum.rank(), 2);
    std::vector<std::size_t> n(lambdas.size(), 0), col(lambdas.size(), 0), fail(lambdas.size(), 0);
    parallelFor(lambdas.size(), options.threads, [&](std::size_t i) {
      const auto g = enumerateCrystal(c.datum, lambdas[i]);
      for (const auto& w : c.words) {
        std::set<StringVector> seen;
        for (std::size_t x = 0; x < g.size(); ++x) {
          ++n[i];
          try {
            if (!seen.insert(stringParam(c.datum, g, x, w)).second) ++col[i];
          } catch (const Error&) {
            ++fail[i];
          }
        }
      }
    });
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      nodes += n[i];
      collisions += col[i];
      failed += fail[i];
    }
  }
  r.passed = collisions == 0 && failed == 0;
  r.detail = plural(nodes, "peels") + ", " + plural(collisions, "collisions") + ", " +
             plural(failed, "incomplete peels");
  return r;
}

Result semigroupClosure(const Options& options) {
  Result r{3, "semigroup closure", true, ""};
  std::size_t sums = 0, missing = 0;
  for (char t : {'A', 'B'}) {
    const auto d = buildCartan(t, 2);
    const auto words = allReducedWords(d, longestWord(d));
    const auto small = dominantWeightsUpTo(2, 1);
    const auto all = dominantWeightsUpTo(2, 2);
    for (const auto& w : words) {
      std::vector<std::set<StringVector>> images(all.size());
      parallelFor(all.size(), options.threads, [&](std::size_t i) {
        auto img = stringImage(d, all[i], w);
        images[i] = std::set<StringVector>(img.begin(), img.end());
      });
      auto imageOf = [&](const Weight& l) -> const std::set<StringVector>& {
        return images[static_cast<std::size_t>(std::find(all.begin(), all.end(), l) - all.begin())];
      };
      for (const auto& l : small)
        for (const auto& m : small) {
          Weight sum{{l.coords[0] + m.coords[0], l.coords[1] + m.coords[1]}};
          const auto& target = imageOf(sum);
          for (const auto& a : imageOf(l))
            for (const auto& b : imageOf(m)) {
              StringVector s = a;
              for (std::size_t k = 0; k < s.entries.size(); ++k) s.entries[k] += b.entries[k];
              ++sums;
              missing += target.count(s) == 0;
            }
        }
    }
  }
  r.passed = missing == 0;
  r.detail = plural(sums, "sums") + ", " + plural(missing, "outside the target image");
  return r;
}

Result coneSaturation(const Options& options) {
  Result r{4, "cone saturation", true, ""};
  std::map<std::string, int> certified;  // lowest certified level per type
  std::size_t cones = 0, failed = 0;
  for (const auto& c : stringCases()) {
    const bool big = heavy(c.datum);
    CertificateOptions opt;
    opt.level_bound = big ? 1 : 2;
    opt.max_level = opt.level_bound + 2;
    opt.threads = options.threads;
    const int required = big ? 2 : 3;
    for (const auto& w : c.words) {
      ++cones;
      const auto inf = inferCone(c.datum, w, opt);
      const int level = inf.certified_level.value_or(-1);
      if (level < required) ++failed;
      auto [it, fresh] = certified.emplace(c.datum.label(), level);
      if (!fresh) it->second = std::min(it->second, level);
    }
  }
  r.passed = failed == 0;
  std::ostringstream out;
  out << plural(cones, "cones") << ", " << plural(failed, "uncertified") << "; certified levels";
  for (const auto& c : stringCases()) out << " " << c.datum.label() << "=" << certified[c.datum.label()];
  r.detail = out.str();
  return r;
}

Result demazureFaces(const Options& options) {
  Result r{5, "Demazure faces", true, ""};
  std::size_t elements = 0, failed = 0;
  for (char t : {'A', 'B'}) {
    const auto d = buildCartan(t, 2);
    std::map<WeylWord, RationalCone> cones;
    for (const auto& w : weylGroupWords(d)) {
      ++elements;
      const auto w0 = adaptedWord(d, w);
      auto it = cones.find(w0);
      if (it == cones.end()) {
        CertificateOptions opt;
        opt.threads = options.threads;
        it = cones.emplace(w0, inferCone(d, w0, opt).cone).first;
      }
      const auto q = demazureQuotient(d, w0, w, it->second, 2, options.threads);
      bool ok = q.adapted && q.tail_zero && q.face && q.normal.has_value();
      for (std::size_t i = 0; i < q.counts.size(); ++i)
        ok &= static_cast<Int>(q.counts[i]) == q.dimensions[i];
      failed += !ok;
    }
  }
  r.passed = failed == 0;
  r.detail = plural(elements, "Weyl group elements") + ", " + plural(failed, "failures");
  return r;
}

Result separatingForms(const Options& options) {
  Result r{6, "separating form", true, ""};
  std::size_t cases = 0, pairs_total = 0, unseparated = 0, slow = 0;
  for (const auto& c : stringCases()) {
    for (const auto& w : c.words) {
      ++cases;
      const auto pairs = buildPairs(c.datum, w, 2, options.threads);
      const auto t0 = Clock::now();
      const auto e = separatingForm(pairs, w.length());
      if (secondsSince(t0) >= 1.0) ++slow;
      pairs_total += pairs.size();
      bool positive = std::all_of(e.begin(), e.end(), [](Int x) { return x >= 1; });
      for (const auto& p : pairs) {
        const IntVec phi(p.phi.entries.begin(), p.phi.entries.end());
        const IntVec psi(p.psi.entries.begin(), p.psi.entries.end());
        if (!positive || exact::dot(e, phi) >= exact::dot(e, psi)) ++unseparated;
      }
    }
  }
  r.passed = unseparated == 0 && slow == 0;
  r.detail = plural(cases, "cases") + ", " + plural(pairs_total, "pairs") + ", " +
             plural(unseparated, "unseparated") + (slow ? ", construction over 1 s" : ", each under 1 s");
  return r;
}

Result hilbertSoundness(const Options& options) {
  Result r{7, "Hilbert basis soundness", true, ""};
  std::size_t cases = 0, failed = 0;
  bool plucker = false;
  for (const auto& c : stringCases()) {
    for (const auto& w : c.words) {
      ++cases;
      CertificateOptions opt;
      opt.level_bound = heavy(c.datum) ? 1 : 2;
      opt.threads = options.threads;
      const auto rep = degenerationCertificate(c.datum, w, std::nullopt, opt);
      const bool ok = rep.certified_level && rep.check("hilbert_generates") &&
                      rep.check("hilbert_minimal") && rep.check("relations_balance");
      failed += !ok;
      if (c.datum.label() == "A2" && w == WeylWord{{1, 2, 1}}) {
        // a +-1 binomial with one generator of each fundamental degree per side
        for (const auto& v : rep.relations) {
          std::multiset<std::vector<int>> plus, minus;
          bool unit = true;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 1) plus.insert(rep.hilbert_basis[i].lambda.coords);
            if (v[i] == -1) minus.insert(rep.hilbert_basis[i].lambda.coords);
            unit &= v[i] >= -1 && v[i] <= 1;
          }
          const std::multiset<std::vector<int>> shape{{0, 1}, {1, 0}};
          plucker |= unit && plus == shape && minus == shape;
        }
      }
    }
  }
  r.passed = failed == 0 && plucker;
  r.detail = plural(cases, "cases") + ", " + plural(failed, "failures") +
             (plucker ? ", A2 (1,2,1) Plucker relation found" : ", A2 (1,2,1) Plucker relation missing");
  return r;
}

Result oracleCrossCheck(const Options& options) {
  Result r{8, "oracle cross-validation", true, ""};
  std::size_t crystals = 0, mismatched = 0;
  std::vector<CartanDatum> data;
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'G', 2}})
    data.push_back(buildCartan(t, n));
  for (const auto& d : data) {
    const auto lambdas = dominantWeightsUpTo(d.rank(), 2);
    std::vector<char> ok(lambdas.size(), 0);
    parallelFor(lambdas.size(), options.threads, [&](std::size_t i) {
      const auto g = enumerateCrystal(d, lambdas[i]);
      std::map<std::vector<int>, Int> multiset;
      for (std::size_t x = 0; x < g.size(); ++x) ++multiset[g.weight(x).coords];
      const auto chi = demazureCharacter(d, lambdas[i], longestWord(d));
      ok[i] = multiset == chi.terms();
    });
    crystals += lambdas.size();
    mismatched += static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  }

  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coord(-4, 4), coeff(-3, 3), terms(1, 6);
  std::size_t not_idempotent = 0;
  for (int trial = 0; trial < options.fuzz_polynomials; ++trial) {
    const auto& d = data[static_cast<std::size_t>(trial) % data.size()];
    WeightPolynomial f;
    const int k = terms(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<int> mu(static_cast<std::size_t>(d.rank()));
      for (auto& x : mu) x = coord(rng);
      f.add(mu, coeff(rng));
    }
    for (int i = 1; i <= d.rank(); ++i) {
      const auto once = demazureOperator(d, i, f);
      if (!(demazureOperator(d, i, once) == once)) ++not_idempotent;
    }
  }
  r.passed = mismatched == 0 && not_idempotent == 0 && options.fuzz_polynomials >= 1000;
  r.detail = plural(crystals, "crystals") + ", " + plural(mismatched, "character mismatches") + ", " +
             std::to_string(options.fuzz_polynomials) + " random polynomials, " +
             plural(not_idempotent, "idempotence failures");
  return r;
}

Result determinism(const Options& options) {
  Result r{9, "determinism", true, ""};
  struct Run {
    char type;
    int rank;
    int level;
    std::optional<WeylWord> w;
  };
  const std::vector<Run> runs{{'A', 2, 2, WeylWord{{1}}}, {'B', 2, 2, std::nullopt}, {'G', 2, 1, std::nullopt}};
  const int many = std::max(4, options.threads);
  std::size_t differing = 0;
  for (const auto& run : runs) {
    const auto d = buildCartan(run.type, run.rank);
    std::string reference;
    for (int threads : {1, many}) {
      CertificateOptions opt;
      opt.level_bound = run.level;
      opt.threads = threads;
      auto text = reportToJson(degenerationCertificate(d, longestWord(d), run.w, opt));
      if (reference.empty())
        reference = std::move(text);
      else if (text != reference)
        ++differing;
    }
  }
  r.passed = differing == 0;
  r.detail = plural(runs.size(), "reports") + " compared at 1 and " + std::to_string(many) +
             " threads, " + plural(differing, "differences");
  return r;
}

std::vector<Result> runAll(const Options& options, const std::function<void(const Result&)>& progress) {
  using Fn = Result (*)(const Options&);
  const Fn criteria[] = {stringCounts,     injectivity,       semigroupClosure,
                         coneSaturation,   demazureFaces,     separatingForms,
                         hilbertSoundness, oracleCrossCheck,  determinism};
  const char* titles[] = {"string-count identity", "injectivity and full peel",
                          "semigroup closure",     "cone saturation",
                          "Demazure faces",        "separating form",
                          "Hilbert basis soundness", "oracle cross-validation",
                          "determinism"};
  std::vector<Result> out;
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    Result res;
    try {
      res = criteria[k](options);
    } catch (const std::exception& e) {
      res = Result{static_cast<int>(k) + 1, titles[k], false, std::string("error: ") + e.what()};
    }
    if (progress) progress(res);
    out.push_back(std::move(res));
  }
  return out;
}

std::string formatLine(const Result& r) {
  return "criterion " + std::to_string(r.id) + " " + (r.passed ? "PASS" : "FAIL") + " " + r.title +
         ": " + r.detail;
}

std::string formatReport(const std::vector<Result>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += formatLine(r) + "\n";
    passed += r.passed;
  }
  out += "summary " + std::to_string(passed) + "/" + std::to_string(results.size()) + " passed\n";
  return out;
}

}  // namespace sc::acceptance
