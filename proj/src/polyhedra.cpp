#include "stringcone/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sc {

using exact::BigInt;
using exact::BigVec;
using exact::QVec;
using exact::Rational;

bool RationalCone::contains(std::span<const Int> x) const {
  if (x.size() != static_cast<std::size_t>(ambient_dim)) reject("cone", "point dimension mismatch");
  for (const auto& u : facets)
    if (exact::dot(u, x) < 0) return false;
  return true;
}

std::size_t RationalCone::dimension() const {
  std::vector<BigVec> rows;
  for (const auto& r : rays) rows.push_back(exact::toBig(r));
  return exact::rank(rows, static_cast<std::size_t>(ambient_dim));
}

namespace {

std::vector<IntVec> canonical(const std::vector<BigVec>& vs, const char* stage) {
  std::set<IntVec> out;
  for (auto v : vs) {
    exact::makePrimitive(v);
    out.insert(exact::toInt(v, stage));
  }
  return {out.begin(), out.end()};
}

std::vector<BigVec> withNegatives(std::vector<BigVec> vs, const std::vector<BigVec>& basis) {
  for (const auto& b : basis) {
    vs.push_back(b);
    BigVec neg = b;
    for (auto& x : neg) x = -x;
    vs.push_back(std::move(neg));
  }
  return vs;
}

std::vector<BigVec> toBigRows(const std::vector<IntVec>& rows, std::size_t dim, const char* stage) {
  std::vector<BigVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != dim) reject(stage, "vector dimension mismatch");
    out.push_back(exact::toBig(r));
  }
  return out;
}

// Fills rays (and pointedness) from a facet description.
void raysFromFacets(RationalCone& cone, const std::vector<BigVec>& facets) {
  const auto dim = static_cast<std::size_t>(cone.ambient_dim);
  auto dd = dd::extremeRays(facets, dim);
  cone.pointed = dd.lineality.empty();
  cone.rays = canonical(withNegatives(dd.rays, dd.lineality), "hull");
}

}  // namespace

RationalCone conicHull(const std::vector<IntVec>& points) {
  if (points.empty()) reject("hull", "conicHull of an empty point set");
  const std::size_t dim = points.front().size();
  if (dim == 0) reject("hull", "points have dimension 0");
  RationalCone cone;
  cone.ambient_dim = static_cast<int>(dim);
  std::set<IntVec> seen;
  std::vector<BigVec> rows;
  for (const auto& p : points) {
    if (p.size() != dim) reject("hull", "points have different dimensions");
    if (std::all_of(p.begin(), p.end(), [](Int x) { return x == 0; })) continue;
    seen.insert(exact::primitive(p));
  }
  // canonical insertion order keeps the computation independent of input order
  for (const auto& p : seen) rows.push_back(exact::toBig(p));
  // facets are the extreme rays of the dual cone {u : <u, p> >= 0}
  auto dual = dd::extremeRays(rows, dim);
  auto facets = withNegatives(dual.rays, dual.lineality);
  cone.facets = canonical(facets, "hull");
  raysFromFacets(cone, facets);
  return cone;
}

RationalCone coneFromInequalities(const std::vector<IntVec>& inequalities, int dim) {
  if (dim <= 0) reject("hull", "cone dimension must be positive");
  RationalCone cone;
  cone.ambient_dim = dim;
  auto rows = toBigRows(inequalities, static_cast<std::size_t>(dim), "hull");
  raysFromFacets(cone, rows);
  if (cone.rays.empty()) {
    for (int i = 0; i < dim; ++i) {
      IntVec e(static_cast<std::size_t>(dim), 0);
      e[static_cast<std::size_t>(i)] = 1;
      cone.facets.push_back(e);
      e[static_cast<std::size_t>(i)] = -1;
      cone.facets.push_back(e);
    }
    std::sort(cone.facets.begin(), cone.facets.end());
    return cone;
  }
  // re-derive an irredundant facet list from the rays
  auto hull = conicHull(cone.rays);
  cone.facets = hull.facets;
  return cone;
}

RationalCone dualize(const RationalCone& cone) {
  RationalCone dual;
  dual.ambient_dim = cone.ambient_dim;
  dual.rays = cone.facets;
  dual.facets = cone.rays;
  // the dual is pointed iff the cone is full-dimensional
  dual.pointed = cone.dimension() == static_cast<std::size_t>(cone.ambient_dim);
  // the zero cone has no rays; its dual is everything
  if (cone.rays.empty()) dual.facets.clear();
  return dual;
}

std::vector<IntVec> latticePointsInSection(const RationalCone& cone, const std::vector<int>& lambda) {
  const auto dim = static_cast<std::size_t>(cone.ambient_dim);
  const std::size_t n = lambda.size();
  if (n > dim) reject("section", "lambda longer than the cone dimension");
  const std::size_t N = dim - n;
  // each facet u gives <u_lambda, lambda> + <u_psi, psi> >= 0
  std::vector<Int> offset;
  std::vector<IntVec> lin;
  for (const auto& u : cone.facets) {
    Int c = 0;
    for (std::size_t k = 0; k < n; ++k) c += u[k] * lambda[k];
    offset.push_back(c);
    lin.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(n), u.end());
  }
  if (N == 0) {
    for (auto c : offset)
      if (c < 0) return {};
    return {IntVec{}};
  }

  // homogenize as (t, psi) with t >= 0
  std::vector<BigVec> rows;
  rows.push_back(BigVec(N + 1, 0));
  rows.back()[0] = 1;
  for (std::size_t f = 0; f < lin.size(); ++f) {
    BigVec r(N + 1);
    r[0] = offset[f];
    for (std::size_t k = 0; k < N; ++k) r[k + 1] = lin[f][k];
    rows.push_back(std::move(r));
  }
  auto dd = dd::extremeRays(rows, N + 1);
  auto unbounded = [&](const BigVec& dir) {
    IntVec psi;
    for (std::size_t k = 1; k <= N; ++k) psi.push_back(dir[k].get_si());
    reject("section",
           "section at lambda=(" + joinInts(lambda) + ") is unbounded along (" + joinInts(psi) + ")",
           ErrorCode::Unbounded);
  };
  std::vector<QVec> vertices;
  for (const auto& r : dd.rays) {
    if (r[0] == 0) continue;
    QVec v;
    for (std::size_t k = 1; k <= N; ++k) v.push_back(Rational(r[k], r[0]));
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) return {};
  if (!dd.lineality.empty()) unbounded(dd.lineality.front());
  for (const auto& r : dd.rays)
    if (r[0] == 0) unbounded(r);

  IntVec lo(N), hi(N);
  for (std::size_t k = 0; k < N; ++k) {
    Rational mn = vertices[0][k], mx = vertices[0][k];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    BigInt c, f;
    mpz_cdiv_q(c.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[k] = c.get_si();
    hi[k] = f.get_si();
  }

  // prune with the largest value the unassigned coordinates can add
  const std::size_t F = lin.size();
  std::vector<std::vector<Int>> rest(F, std::vector<Int>(N + 1, 0));
  for (std::size_t f = 0; f < F; ++f)
    for (std::size_t k = N; k-- > 0;)
      rest[f][k] = rest[f][k + 1] + std::max(lin[f][k] * lo[k], lin[f][k] * hi[k]);

  std::vector<IntVec> out;
  IntVec psi(N, 0);
  std::vector<Int> partial(offset);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == N) {
      for (std::size_t f = 0; f < F; ++f)
        if (partial[f] < 0) return;
      out.push_back(psi);
      return;
    }
    for (Int x = lo[k]; x <= hi[k]; ++x) {
      bool ok = true;
      for (std::size_t f = 0; f < F; ++f) {
        partial[f] += lin[f][k] * x;
        if (partial[f] + rest[f][k + 1] < 0) ok = false;
      }
      psi[k] = x;
      if (ok) self(self, k + 1);
      for (std::size_t f = 0; f < F; ++f) partial[f] -= lin[f][k] * x;
    }
  };
  recurse(recurse, 0);
  return out;
}

FaceCheck isFace(const RationalCone& cone, const std::vector<IntVec>& points) {
  const auto dim = static_cast<std::size_t>(cone.ambient_dim);
  FaceCheck result;
  result.normal.assign(dim, 0);
  for (const auto& p : points)
    if (p.size() != dim) reject("face", "point dimension mismatch");
  for (const auto& p : points)
    if (!cone.contains(p)) return result;

  std::vector<const IntVec*> supporting;
  for (const auto& u : cone.facets) {
    bool vanishes = true;
    for (const auto& p : points) vanishes &= exact::dot(u, p) == 0;
    if (vanishes) supporting.push_back(&u);
  }
  std::vector<IntVec> face_rays;
  for (const auto& r : cone.rays) {
    bool in = true;
    for (const auto* u : supporting) in &= exact::dot(*u, r) == 0;
    if (in) face_rays.push_back(r);
  }

  bool nonzero = false;
  for (const auto& p : points)
    for (auto x : p) nonzero |= x != 0;
  if (!nonzero) {
    result.is_face = face_rays.empty();
  } else {
    auto hull = conicHull(points);
    result.is_face = std::all_of(face_rays.begin(), face_rays.end(),
                                 [&](const IntVec& r) { return hull.contains(r); });
  }
  if (!result.is_face) return result;
  for (const auto* u : supporting)
    for (std::size_t k = 0; k < dim; ++k) result.normal[k] += (*u)[k];
  result.normal = exact::primitive(result.normal);
  return result;
}

SaturationReport saturationCheck(const RationalCone& cone,
                                 const std::vector<WeightedPoint>& enumerated, int level_bound,
                                 int rank, int threads) {
  SaturationReport report;
  report.level = level_bound;
  const auto lambdas = dominantWeightsUpTo(rank, level_bound);
  std::map<Weight, std::vector<IntVec>> data;
  for (const auto& p : enumerated) {
    if (static_cast<int>(p.lambda.coords.size()) != rank)
      reject("saturation", "enumerated point has the wrong rank");
    data[p.lambda].push_back(IntVec(p.psi.entries.begin(), p.psi.entries.end()));
  }
  std::vector<std::vector<IntVec>> sections(lambdas.size());
  parallelFor(lambdas.size(), threads,
              [&](std::size_t i) { sections[i] = latticePointsInSection(cone, lambdas[i].coords); });

  auto toPoint = [](const Weight& l, const IntVec& v) {
    return WeightedPoint{l, StringVector{std::vector<int>(v.begin(), v.end())}};
  };
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto& l = lambdas[i];
    auto have = data.count(l) ? data[l] : std::vector<IntVec>{};
    std::sort(have.begin(), have.end());
    have.erase(std::unique(have.begin(), have.end()), have.end());
    const auto& cone_pts = sections[i];
    std::vector<IntVec> a, b;
    std::set_difference(cone_pts.begin(), cone_pts.end(), have.begin(), have.end(),
                        std::back_inserter(a));
    std::set_difference(have.begin(), have.end(), cone_pts.begin(), cone_pts.end(),
                        std::back_inserter(b));
    for (const auto& v : a) report.missing_from_data.push_back(toPoint(l, v));
    for (const auto& v : b) report.missing_from_cone.push_back(toPoint(l, v));
    report.sections.push_back({l, cone_pts.size(), have.size()});
  }
  report.equal = report.missing_from_data.empty() && report.missing_from_cone.empty();
  return report;
}

std::string formatVectors(int dim, const std::vector<IntVec>& rows) {
  std::string out = "dim " + std::to_string(dim) + "\n";
  for (const auto& r : rows) out += joinInts(r, " ") + "\n";
  return out;
}

std::pair<int, std::vector<IntVec>> parseVectors(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) reject("parse", "missing 'dim' header");
  std::istringstream head(line);
  std::string tag;
  int dim = -1;
  if (!(head >> tag >> dim) || tag != "dim" || dim < 0) reject("parse", "bad header: " + line);
  std::vector<IntVec> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    IntVec v;
    Int x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof() || v.size() != static_cast<std::size_t>(dim))
      reject("parse", "bad row: " + line);
    rows.push_back(std::move(v));
  }
  return {dim, rows};
}

}  // namespace sc
