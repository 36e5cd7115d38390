#include "stringcone/pathcrystal.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sc {

PiecewisePath::PiecewisePath(std::vector<PathSegment> segments) {
  for (auto& s : segments) {
    if (s.duration == 0) continue;
    if (!segments_.empty() && segments_.back().direction == s.direction)
      segments_.back().duration += s.duration;
    else
      segments_.push_back(std::move(s));
  }
}

Weight PiecewisePath::endpoint() const {
  if (segments_.empty()) return Weight{};
  const std::size_t n = segments_.front().direction.size();
  Weight w{std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class x = 0;
    for (const auto& s : segments_) x += s.direction[i] * s.duration;
    if (x.get_den() != 1)
      reject("crystal", "path endpoint is not integral: " + str(), ErrorCode::Internal);
    w.coords[i] = static_cast<int>(x.get_num().get_si());
  }
  return w;
}

std::vector<mpq_class> PiecewisePath::heights(int letter) const {
  std::vector<mpq_class> h;
  h.reserve(segments_.size() + 1);
  h.emplace_back(0);
  for (const auto& s : segments_) h.push_back(h.back() + s.direction[letter - 1] * s.duration);
  return h;
}

std::string PiecewisePath::str() const {
  std::string out;
  for (const auto& s : segments_) {
    if (!out.empty()) out += " ";
    out += "(" + joinInts(s.direction) + ")x" + s.duration.get_str();
  }
  return out;
}

bool operator==(const PiecewisePath& a, const PiecewisePath& b) {
  if (a.segments_.size() != b.segments_.size()) return false;
  for (std::size_t k = 0; k < a.segments_.size(); ++k)
    if (a.segments_[k].direction != b.segments_[k].direction ||
        a.segments_[k].duration != b.segments_[k].duration)
      return false;
  return true;
}

bool operator<(const PiecewisePath& a, const PiecewisePath& b) {
  if (a.segments_.size() != b.segments_.size()) return a.segments_.size() < b.segments_.size();
  for (std::size_t k = 0; k < a.segments_.size(); ++k) {
    const auto& x = a.segments_[k];
    const auto& y = b.segments_[k];
    if (x.direction != y.direction) return x.direction < y.direction;
    if (x.duration != y.duration) return x.duration < y.duration;
  }
  return false;
}

PiecewisePath highestPath(const CartanDatum& datum, const Weight& lambda) {
  datum.checkWeight(lambda);
  if (!lambda.dominant())
    reject("crystal", "lambda (" + joinInts(lambda.coords) + ") is not dominant");
  return PiecewisePath({PathSegment{lambda.coords, mpq_class(1)}});
}

namespace {

std::vector<int> reflectDirection(const CartanDatum& datum, int letter,
                                  const std::vector<int>& dir) {
  return datum.reflect(letter, Weight{dir}).coords;
}

}  // namespace

std::optional<PiecewisePath> rootOperatorF(const CartanDatum& datum, const PiecewisePath& path,
                                           int letter) {
  const auto& segs = path.segments();
  const auto h = path.heights(letter);
  const mpq_class m = *std::min_element(h.begin(), h.end());
  if (h.back() - m < 1) return std::nullopt;

  std::size_t start = 0;  // last breakpoint attaining the minimum
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] == m) start = k;
  const mpq_class target = m + 1;

  std::vector<PathSegment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(start));
  std::size_t j = start;
  for (; j < segs.size(); ++j) {
    if (h[j + 1] < target) {
      out.push_back({reflectDirection(datum, letter, segs[j].direction), segs[j].duration});
      continue;
    }
    const mpq_class tau = (target - h[j]) / segs[j].direction[letter - 1];
    out.push_back({reflectDirection(datum, letter, segs[j].direction), tau});
    out.push_back({segs[j].direction, segs[j].duration - tau});
    break;
  }
  for (++j; j < segs.size(); ++j) out.push_back(segs[j]);
  return PiecewisePath(std::move(out));
}

std::optional<PiecewisePath> rootOperatorE(const CartanDatum& datum, const PiecewisePath& path,
                                           int letter) {
  const auto& segs = path.segments();
  const auto h = path.heights(letter);
  const mpq_class m = *std::min_element(h.begin(), h.end());
  if (m > -1) return std::nullopt;

  std::size_t stop = 0;  // first breakpoint attaining the minimum
  while (h[stop] != m) ++stop;
  const mpq_class target = m + 1;

  // walk back from `stop` to the last time h equals m + 1
  std::size_t j = stop;
  std::vector<PathSegment> tail;
  while (j-- > 0) {
    if (h[j] < target) {
      tail.push_back({reflectDirection(datum, letter, segs[j].direction), segs[j].duration});
      continue;
    }
    const mpq_class tau = (target - h[j]) / segs[j].direction[letter - 1];
    tail.push_back({reflectDirection(datum, letter, segs[j].direction), segs[j].duration - tau});
    tail.push_back({segs[j].direction, tau});
    break;
  }
  std::vector<PathSegment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(j));
  out.insert(out.end(), tail.rbegin(), tail.rend());
  out.insert(out.end(), segs.begin() + static_cast<std::ptrdiff_t>(stop), segs.end());
  return PiecewisePath(std::move(out));
}

std::pair<int, int> epsilonPhi(const PiecewisePath& path, int letter) {
  const auto h = path.heights(letter);
  const mpq_class m = *std::min_element(h.begin(), h.end());
  const mpq_class eps = -m;
  const mpq_class phi = h.back() - m;
  if (eps.get_den() != 1 || phi.get_den() != 1)
    reject("crystal", "non-integral string statistics on path " + path.str(),
           ErrorCode::Internal);
  return {static_cast<int>(eps.get_num().get_si()), static_cast<int>(phi.get_num().get_si())};
}

Weight pathWeight(const PiecewisePath& path) { return path.endpoint(); }

std::size_t CrystalGraph::find(const PiecewisePath& path) const {
  auto it = index_.find(path);
  return it == index_.end() ? npos : it->second;
}

std::string CrystalGraph::dump() const {
  std::string out = "# nodes " + std::to_string(size()) + " rank " + std::to_string(rank_) +
                    " lambda " + joinInts(lambda_.coords) + "\n";
  for (std::size_t x = 0; x < size(); ++x)
    for (int i = 1; i <= rank_; ++i)
      if (f(x, i) != npos)
        out += std::to_string(x) + " " + std::to_string(i) + " " + std::to_string(f(x, i)) + "\n";
  return out;
}

CrystalGraph enumerateCrystal(const CartanDatum& datum, const Weight& lambda, std::size_t cap) {
  CrystalGraph g;
  g.rank_ = datum.rank();
  g.lambda_ = lambda;
  const std::size_t n = static_cast<std::size_t>(datum.rank());

  auto add = [&](PiecewisePath p) {
    if (g.paths_.size() >= cap)
      reject("crystal",
             "crystal of lambda (" + joinInts(lambda.coords) + ") exceeds node cap " +
                 std::to_string(cap),
             ErrorCode::CapExceeded);
    const std::size_t id = g.paths_.size();
    g.index_.emplace(p, id);
    g.paths_.push_back(std::move(p));
    g.f_.emplace_back(n, CrystalGraph::npos);
    g.e_.emplace_back(n, CrystalGraph::npos);
    return id;
  };

  add(highestPath(datum, lambda));
  for (std::size_t x = 0; x < g.paths_.size(); ++x) {
    for (int i = 1; i <= datum.rank(); ++i) {
      auto y = rootOperatorF(datum, g.paths_[x], i);
      if (!y) continue;
      auto it = g.index_.find(*y);
      const std::size_t id = it == g.index_.end() ? add(std::move(*y)) : it->second;
      g.f_[x][i - 1] = id;
      g.e_[id][i - 1] = x;
    }
  }

  g.eps_.resize(g.size());
  g.phi_.resize(g.size());
  g.weights_.resize(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    g.eps_[x].resize(n);
    g.phi_[x].resize(n);
    for (int i = 1; i <= datum.rank(); ++i) {
      auto [eps, phi] = epsilonPhi(g.paths_[x], i);
      g.eps_[x][i - 1] = eps;
      g.phi_[x][i - 1] = phi;
    }
    g.weights_[x] = pathWeight(g.paths_[x]);
  }
  return g;
}

std::vector<std::size_t> demazureCrystal(const CartanDatum& datum, const CrystalGraph& graph,
                                         const WeylWord& w_word) {
  datum.checkWord(w_word);
  if (!isReducedWord(datum, w_word))
    reject("crystal", "Demazure word (" + formatWord(w_word) + ") is not reduced");
  std::set<std::size_t> current{graph.highest()};
  for (auto it = w_word.letters.rbegin(); it != w_word.letters.rend(); ++it) {
    std::set<std::size_t> next;
    for (std::size_t x : current) {
      for (std::size_t y = x; y != CrystalGraph::npos; y = graph.f(y, *it)) next.insert(y);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

}  // namespace sc
