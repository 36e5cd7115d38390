#pragma once

// Toric degeneration certificate: the weighted string cone with its Hilbert
// basis and relation lattice, a weight form separating equal-grade pairs,
// and optionally the Demazure face.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringcone/polyhedra.hpp"

namespace sc {

struct StringPair {
  StringVector phi;  // lexicographically smaller
  StringVector psi;
  Weight lambda;

  auto operator<=>(const StringPair&) const = default;
};

// Pairs of distinct strings in B(lambda) with equal weight, for every dominant
// lambda with coordinates <= level_bound, sorted.
std::vector<StringPair> buildPairs(const CartanDatum& datum, const WeylWord& word, int level_bound,
                                   int threads = 1);
std::vector<StringPair> buildPairs(const CartanDatum& datum, const WeylWord& word,
                                   const std::vector<WeightedPoint>& points);

// Positive integer form e with e(phi) < e(psi) on every pair, built by the
// descending cascade e_s = x_s + eps_{s+1} e_{s+1}, where eps is the largest
// 1/2^k (k >= 0) meeting the strict bound for the pairs first separated at s.
// `length` is the string length; pairs must be strictly increasing.
IntVec separatingForm(const std::vector<std::pair<StringVector, StringVector>>& pairs,
                      std::size_t length);
IntVec separatingForm(const std::vector<StringPair>& pairs, std::size_t length);

// Basis of the integer relations among the generators (Hermite normal form).
std::vector<IntVec> latticeRelations(const std::vector<IntVec>& generators);

struct DemazureQuotient {
  WeylWord w;
  bool adapted = false;
  std::vector<WeightedPoint> points;   // Demazure strings for lambda <= level
  std::vector<std::size_t> counts;     // per lambda of dominantWeightsUpTo
  std::vector<Int> dimensions;         // Demazure character dimensions
  bool tail_zero = false;              // adapted words: entries past l(w) vanish
  bool face = false;
  std::optional<IntVec> normal;        // coordinate tail normal when adapted
};

DemazureQuotient demazureQuotient(const CartanDatum& datum, const WeylWord& w0_word,
                                  const WeylWord& w_word, const RationalCone& cone,
                                  int level_bound, int threads = 1);

struct SectionRecord {
  Weight lambda;
  std::size_t points = 0;
  Int weyl_dim = 0;
  bool match = false;
  std::optional<std::size_t> demazure_points;
  std::optional<Int> demazure_dim;
  std::optional<bool> demazure_match;
};

struct CertificateOptions {
  int level_bound = 2;
  int max_level = 4;  // highest hull level the saturation loop may reach
  std::size_t node_cap = kDefaultNodeCap;
  int threads = 1;
};

struct ConeInference {
  RationalCone cone;
  int hull_level = 0;                  // level of the data the hull was built from
  std::optional<int> certified_level;  // hull_level + 1 when saturation held
  SaturationReport saturation;         // last check performed
  std::vector<WeightedPoint> data;     // enumerated points at hull_level + 1
};

// Hull of the weighted points at level_bound, checked against level + 1 and
// rebuilt one level higher after any mismatch, up to max_level.
ConeInference inferCone(const CartanDatum& datum, const WeylWord& w0_word,
                        const CertificateOptions& options);

struct DegenerationReport {
  std::string type;
  int rank = 0;
  WeylWord word;
  std::optional<WeylWord> demazure_word;
  RationalCone cone;
  int hull_level = 0;
  std::optional<int> certified_level;
  std::vector<WeightedPoint> hilbert_basis;
  std::vector<IntVec> relations;
  IntVec weight_form;
  std::size_t pair_count = 0;
  std::vector<SectionRecord> sections;
  // Demazure quotient summary, present with a Demazure word; for non-adapted
  // words the face flag is data rather than a check
  bool demazure_adapted = false;
  std::optional<bool> demazure_face;
  std::optional<IntVec> demazure_normal;
  std::vector<std::pair<std::string, bool>> checks;  // in evaluation order
  std::vector<std::pair<std::string, double>> timings_ms;

  bool passing() const;
  bool check(const std::string& name) const;
};

// Checks that every point decomposes as a nonnegative integer combination of
// the generators (exhaustive search with memo, bounded by the grading).
bool generatesAll(const RationalCone& cone, const std::vector<IntVec>& generators,
                  const std::vector<IntVec>& points);
// No generator is reducible by another.
bool isMinimalGeneratingSet(const RationalCone& cone, const std::vector<IntVec>& generators);

DegenerationReport degenerationCertificate(const CartanDatum& datum, const WeylWord& w0_word,
                                           const std::optional<WeylWord>& w_word,
                                           const CertificateOptions& options = {});

// JSON with fixed key order; timings_ms is emitted only when requested so the
// default output is byte-stable.
std::string reportToJson(const DegenerationReport& report, bool with_timings = false);
// Cone rays, facets and metadata as JSON.
std::string coneToJson(const DegenerationReport& report);

}  // namespace sc
