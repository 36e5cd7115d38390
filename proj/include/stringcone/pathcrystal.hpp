#pragma once

// Crystal B(lambda) realized by piecewise-linear paths and root operators.
// All arithmetic is exact (GMP rationals for segment durations).

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringcone/cartan.hpp"

namespace sc {

struct PathSegment {
  std::vector<int> direction;  // integral weight, fundamental coordinates
  mpq_class duration;          // > 0
};

// A path t -> pi(t) on [0,1] with pi(0) = 0, kept in canonical form: no
// zero-length segments and no two adjacent segments with equal direction.
// Two crystal elements are equal iff their canonical paths are equal.
class PiecewisePath {
 public:
  PiecewisePath() = default;
  explicit PiecewisePath(std::vector<PathSegment> segments);

  const std::vector<PathSegment>& segments() const { return segments_; }
  // pi(1); throws if not integral.
  Weight endpoint() const;
  // h_i at every breakpoint (size = #segments + 1); h_i(t) = <pi(t), alpha_i^vee>.
  std::vector<mpq_class> heights(int letter) const;
  std::string str() const;

  friend bool operator==(const PiecewisePath& a, const PiecewisePath& b);
  friend bool operator<(const PiecewisePath& a, const PiecewisePath& b);

 private:
  std::vector<PathSegment> segments_;
};

PiecewisePath highestPath(const CartanDatum& datum, const Weight& lambda);
std::optional<PiecewisePath> rootOperatorF(const CartanDatum& datum, const PiecewisePath& path,
                                           int letter);
std::optional<PiecewisePath> rootOperatorE(const CartanDatum& datum, const PiecewisePath& path,
                                           int letter);
// (epsilon_i, phi_i)
std::pair<int, int> epsilonPhi(const PiecewisePath& path, int letter);
Weight pathWeight(const PiecewisePath& path);

class CrystalGraph {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::size_t size() const { return paths_.size(); }
  int rank() const { return rank_; }
  const Weight& highestWeight() const { return lambda_; }
  std::size_t highest() const { return 0; }
  const PiecewisePath& path(std::size_t node) const { return paths_[node]; }
  // letters are 1-based; npos when the operator kills the node
  std::size_t f(std::size_t node, int letter) const { return f_[node][letter - 1]; }
  std::size_t e(std::size_t node, int letter) const { return e_[node][letter - 1]; }
  int epsilon(std::size_t node, int letter) const { return eps_[node][letter - 1]; }
  int phi(std::size_t node, int letter) const { return phi_[node][letter - 1]; }
  const Weight& weight(std::size_t node) const { return weights_[node]; }
  // Node lookup by canonical path; npos if absent.
  std::size_t find(const PiecewisePath& path) const;

  // "# nodes K rank n lambda l1,...,ln" header, then one "src i dst" line per
  // f_i edge, ordered by source node then letter.
  std::string dump() const;

 private:
  friend CrystalGraph enumerateCrystal(const CartanDatum&, const Weight&, std::size_t);

  int rank_ = 0;
  Weight lambda_;
  std::vector<PiecewisePath> paths_;
  std::vector<std::vector<std::size_t>> f_, e_;
  std::vector<std::vector<int>> eps_, phi_;
  std::vector<Weight> weights_;
  std::map<PiecewisePath, std::size_t> index_;
};

inline constexpr std::size_t kDefaultNodeCap = 20000;

// Breadth-first closure of the highest path under all f_i. Node numbering is
// the BFS discovery order with letters expanded in increasing order.
CrystalGraph enumerateCrystal(const CartanDatum& datum, const Weight& lambda,
                              std::size_t cap = kDefaultNodeCap);

// Demazure crystal of a reduced word (j_1..j_p): the closure
// f_{j_1}^* ( f_{j_2}^* ( ... f_{j_p}^* {highest} ) ). Sorted node ids.
std::vector<std::size_t> demazureCrystal(const CartanDatum& datum, const CrystalGraph& graph,
                                         const WeylWord& w_word);

}  // namespace sc
