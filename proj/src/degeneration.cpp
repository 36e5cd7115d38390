#include "stringcone/degeneration.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "stringcone/characters.hpp"

namespace sc {

using exact::BigInt;
using exact::BigVec;
using exact::QVec;
using exact::Rational;

bool DegenerationReport::passing() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool DegenerationReport::check(const std::string& name) const {
  for (const auto& [n, v] : checks)
    if (n == name) return v;
  reject("report", "no check named " + name);
}

std::vector<StringPair> buildPairs(const CartanDatum& datum, const WeylWord& word,
                                   const std::vector<WeightedPoint>& points) {
  std::map<std::pair<Weight, Weight>, std::vector<StringVector>> groups;
  for (const auto& p : points)
    groups[{p.lambda, stringWeight(datum, p.lambda, p.psi, word)}].push_back(p.psi);
  std::vector<StringPair> pairs;
  for (auto& [key, strings] : groups) {
    std::sort(strings.begin(), strings.end());
    for (std::size_t a = 0; a < strings.size(); ++a)
      for (std::size_t b = a + 1; b < strings.size(); ++b)
        pairs.push_back({strings[a], strings[b], key.first});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<StringPair> buildPairs(const CartanDatum& datum, const WeylWord& word, int level_bound,
                                   int threads) {
  checkLongestWord(datum, word);
  if (level_bound < 0) reject("pairs", "level bound must be nonnegative");
  return buildPairs(datum, word, weightedPoints(datum, word, level_bound, kDefaultNodeCap, threads));
}

IntVec separatingForm(const std::vector<std::pair<StringVector, StringVector>>& pairs,
                      std::size_t length) {
  // bucket pairs by the first coordinate where they differ
  std::vector<std::vector<std::size_t>> first(length);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [phi, psi] = pairs[p];
    if (phi.entries.size() != length || psi.entries.size() != length)
      reject("form", "pair length does not match the string length");
    if (!(phi < psi))
      reject("form", "pair (" + joinInts(phi.entries) + ") / (" + joinInts(psi.entries) +
                         ") is not strictly increasing");
    std::size_t s = 0;
    while (phi.entries[s] == psi.entries[s]) ++s;
    first[s].push_back(p);
  }
  if (length == 0) return {};

  QVec e(length, 0);
  e[length - 1] = 1;
  for (std::size_t s = length - 1; s-- > 0;) {
    Rational eps = 1;
    for (auto p : first[s]) {
      const auto& [phi, psi] = pairs[p];
      Rational value = 0;
      for (std::size_t k = s + 1; k < length; ++k) value += e[k] * phi.entries[k];
      const int gap = psi.entries[s] - phi.entries[s];
      while (eps * value >= gap) eps /= 2;
    }
    for (std::size_t k = s + 1; k < length; ++k) e[k] *= eps;
    e[s] = 1;
  }
  return exact::toInt(exact::clearDenominators(e), "form");
}

IntVec separatingForm(const std::vector<StringPair>& pairs, std::size_t length) {
  std::vector<std::pair<StringVector, StringVector>> plain;
  plain.reserve(pairs.size());
  for (const auto& p : pairs) plain.emplace_back(p.phi, p.psi);
  return separatingForm(plain, length);
}

std::vector<IntVec> latticeRelations(const std::vector<IntVec>& generators) {
  if (generators.empty()) return {};
  const std::size_t dim = generators.front().size();
  std::vector<BigVec> big;
  for (const auto& g : generators) {
    if (g.size() != dim) reject("relations", "generators have different dimensions");
    big.push_back(exact::toBig(g));
  }
  std::vector<IntVec> out;
  for (const auto& v : exact::integerKernel(big, dim)) out.push_back(exact::toInt(v, "relations"));
  return out;
}

bool generatesAll(const RationalCone& cone, const std::vector<IntVec>& generators,
                  const std::vector<IntVec>& points) {
  std::map<IntVec, bool> memo;
  auto decomposes = [&](auto&& self, const IntVec& x) -> bool {
    if (std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; })) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    IntVec rest(x.size());
    for (const auto& g : generators) {
      for (std::size_t k = 0; k < x.size(); ++k) rest[k] = x[k] - g[k];
      // partial sums of a decomposition stay in the cone
      if (cone.contains(rest) && self(self, rest)) {
        ok = true;
        break;
      }
    }
    memo.emplace(x, ok);
    return ok;
  };
  return std::all_of(points.begin(), points.end(),
                     [&](const IntVec& p) { return cone.contains(p) && decomposes(decomposes, p); });
}

bool isMinimalGeneratingSet(const RationalCone& cone, const std::vector<IntVec>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) others.push_back(generators[j]);
    if (generatesAll(cone, others, {generators[i]})) return false;
  }
  return true;
}

DemazureQuotient demazureQuotient(const CartanDatum& datum, const WeylWord& w0_word,
                                  const WeylWord& w_word, const RationalCone& cone,
                                  int level_bound, int threads) {
  checkLongestWord(datum, w0_word);
  datum.checkWord(w_word);
  if (!isReducedWord(datum, w_word))
    reject("demazure", "word (" + formatWord(w_word) + ") is not reduced");
  DemazureQuotient q;
  q.w = w_word;
  const std::size_t len = w_word.length();
  {
    WeylWord prefix{{w0_word.letters.begin(), w0_word.letters.begin() + static_cast<std::ptrdiff_t>(len)}};
    const auto rho = datum.rho();
    q.adapted = applyWord(datum, prefix, rho) == applyWord(datum, w_word, rho);
  }

  const int n = datum.rank();
  const auto lambdas = dominantWeightsUpTo(n, level_bound);
  std::vector<std::vector<StringVector>> strings(lambdas.size());
  q.dimensions.assign(lambdas.size(), 0);
  parallelFor(lambdas.size(), threads, [&](std::size_t i) {
    strings[i] = demazureStrings(datum, lambdas[i], w_word, w0_word);
    q.dimensions[i] = dimensionOf(demazureCharacter(datum, lambdas[i], w_word));
  });
  std::vector<IntVec> vectors;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    q.counts.push_back(strings[i].size());
    for (auto& s : strings[i]) {
      q.points.push_back({lambdas[i], s});
      vectors.push_back(q.points.back().concatenated());
    }
  }
  q.tail_zero = std::all_of(q.points.begin(), q.points.end(), [&](const WeightedPoint& p) {
    return std::all_of(p.psi.entries.begin() + static_cast<std::ptrdiff_t>(len), p.psi.entries.end(),
                       [](int x) { return x == 0; });
  });
  q.face = isFace(cone, vectors).is_face;

  if (q.adapted && q.tail_zero) {
    // the sum of the coordinates past l(w) must support exactly this face
    IntVec tail(static_cast<std::size_t>(cone.ambient_dim), 0);
    for (std::size_t k = static_cast<std::size_t>(n) + len; k < tail.size(); ++k) tail[k] = 1;
    bool valid = true;
    std::vector<IntVec> on_face;
    for (const auto& r : cone.rays) {
      const Int v = exact::dot(tail, r);
      if (v < 0) valid = false;
      if (v == 0) on_face.push_back(r);
    }
    if (valid && !vectors.empty()) {
      auto hull = conicHull(vectors);
      valid = std::all_of(on_face.begin(), on_face.end(),
                          [&](const IntVec& r) { return hull.contains(r); });
    }
    if (valid) q.normal = exact::primitive(tail);
  }
  return q;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<IntVec> concatenate(const std::vector<WeightedPoint>& points) {
  std::vector<IntVec> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.concatenated());
  return out;
}

}  // namespace

ConeInference inferCone(const CartanDatum& datum, const WeylWord& w0_word,
                        const CertificateOptions& options) {
  checkLongestWord(datum, w0_word);
  if (options.level_bound < 1) reject("cone", "level bound must be at least 1");
  ConeInference out;
  int level = options.level_bound;
  const int max_level = std::max(options.max_level, level);
  auto points = weightedPoints(datum, w0_word, level, options.node_cap, options.threads);
  while (true) {
    out.cone = conicHull(concatenate(points));
    out.data = weightedPoints(datum, w0_word, level + 1, options.node_cap, options.threads);
    out.saturation = saturationCheck(out.cone, out.data, level + 1, datum.rank(), options.threads);
    if (out.saturation.equal) {
      out.certified_level = level + 1;
      break;
    }
    if (level >= max_level) break;
    ++level;
    points = out.data;
  }
  out.hull_level = level;
  return out;
}

DegenerationReport degenerationCertificate(const CartanDatum& datum, const WeylWord& w0_word,
                                           const std::optional<WeylWord>& w_word,
                                           const CertificateOptions& options) {
  checkLongestWord(datum, w0_word);
  if (options.level_bound < 1) reject("degenerate", "level bound must be at least 1");
  if (w_word) {
    datum.checkWord(*w_word);
    if (!isReducedWord(datum, *w_word))
      reject("degenerate", "Demazure word (" + formatWord(*w_word) + ") is not reduced");
  }
  const int n = datum.rank();
  const int threads = options.threads;
  DegenerationReport report;
  report.type = std::string(1, datum.type());
  report.rank = n;
  report.word = w0_word;
  report.demazure_word = w_word;
  Stopwatch clock(report.timings_ms);

  auto inferred = inferCone(datum, w0_word, options);
  report.cone = std::move(inferred.cone);
  report.hull_level = inferred.hull_level;
  report.certified_level = inferred.certified_level;
  const auto& sat = inferred.saturation;
  const auto& check_points = inferred.data;
  const int data_level = inferred.hull_level + 1;
  clock.lap("cone");
  report.checks.emplace_back("saturation", sat.equal);

  bool counts_ok = true;
  for (const auto& s : sat.sections) {
    SectionRecord rec;
    rec.lambda = s.lambda;
    rec.points = s.cone_points;
    rec.weyl_dim = weylDim(datum, s.lambda);
    rec.match = static_cast<Int>(s.cone_points) == rec.weyl_dim &&
                static_cast<Int>(s.data_points) == rec.weyl_dim;
    counts_ok &= rec.match;
    report.sections.push_back(std::move(rec));
  }
  report.checks.emplace_back("section_counts", counts_ok);

  IntVec grading(static_cast<std::size_t>(report.cone.ambient_dim), 0);
  for (int i = 0; i < n; ++i) grading[static_cast<std::size_t>(i)] = 1;
  const auto hb = hilbertBasis(report.cone, grading);
  for (const auto& h : hb.elements) {
    WeightedPoint p;
    p.lambda.coords.assign(h.begin(), h.begin() + n);
    p.psi.entries.assign(h.begin() + n, h.end());
    report.hilbert_basis.push_back(std::move(p));
  }
  report.checks.emplace_back("hilbert_generates",
                             generatesAll(report.cone, hb.elements, concatenate(check_points)));
  report.checks.emplace_back("hilbert_minimal", isMinimalGeneratingSet(report.cone, hb.elements));
  clock.lap("hilbert");

  report.relations = latticeRelations(hb.elements);
  bool balanced = true;
  for (const auto& v : report.relations) {
    BigVec sum(static_cast<std::size_t>(report.cone.ambient_dim), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += BigInt(v[i]) * hb.elements[i][k];
    balanced &= std::all_of(sum.begin(), sum.end(), [](const BigInt& x) { return x == 0; });
  }
  {
    std::vector<BigVec> rows;
    for (const auto& h : hb.elements) rows.push_back(exact::toBig(h));
    const auto r = exact::rank(rows, static_cast<std::size_t>(report.cone.ambient_dim));
    balanced &= report.relations.size() == hb.elements.size() - r;
  }
  report.checks.emplace_back("relations_balance", balanced);
  clock.lap("relations");

  const auto pairs = buildPairs(datum, w0_word, check_points);
  report.pair_count = pairs.size();
  bool graded = true;
  for (const auto& p : pairs)
    graded &= p.phi < p.psi && stringWeight(datum, p.lambda, p.phi, w0_word) ==
                                   stringWeight(datum, p.lambda, p.psi, w0_word);
  report.checks.emplace_back("pairs_graded", graded);
  report.weight_form = separatingForm(pairs, w0_word.length());
  report.checks.emplace_back(
      "form_positive",
      std::all_of(report.weight_form.begin(), report.weight_form.end(), [](Int c) { return c >= 1; }));
  bool separates = true;
  for (const auto& p : pairs) {
    const IntVec phi(p.phi.entries.begin(), p.phi.entries.end());
    const IntVec psi(p.psi.entries.begin(), p.psi.entries.end());
    separates &= exact::dot(report.weight_form, phi) < exact::dot(report.weight_form, psi);
  }
  report.checks.emplace_back("form_separates", separates);
  clock.lap("form");

  if (w_word) {
    const auto q = demazureQuotient(datum, w0_word, *w_word, report.cone, data_level, threads);
    bool dem_ok = true;
    for (std::size_t i = 0; i < report.sections.size(); ++i) {
      auto& rec = report.sections[i];
      rec.demazure_points = q.counts[i];
      rec.demazure_dim = q.dimensions[i];
      rec.demazure_match = static_cast<Int>(q.counts[i]) == q.dimensions[i];
      dem_ok &= *rec.demazure_match;
    }
    report.checks.emplace_back("demazure_counts", dem_ok);
    report.demazure_adapted = q.adapted;
    report.demazure_face = q.face;
    report.demazure_normal = q.normal;
    if (q.adapted) {
      report.checks.emplace_back("demazure_face", q.face);
      report.checks.emplace_back("demazure_tail_zero", q.tail_zero);
      report.checks.emplace_back("demazure_tail_normal", q.normal.has_value());
    }
    clock.lap("demazure");
  }
  return report;
}

}  // namespace sc
