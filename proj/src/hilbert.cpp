#include <algorithm>
#include <map>
#include <set>

#include "stringcone/polyhedra.hpp"

namespace sc {

using exact::BigInt;
using exact::BigVec;
using exact::QVec;
using exact::Rational;

namespace {

using Simplex = std::vector<std::size_t>;

BigInt dotQ(const BigVec& a, const BigVec& b) { return exact::dot(a, b); }

// Placing triangulation of a pointed full-dimensional cone in R^k given by
// its rays; each new ray is joined to the boundary facets it sees.
std::vector<Simplex> triangulate(const std::vector<BigVec>& rays, std::size_t k) {
  exact::RowEchelon ech(k);
  Simplex first;
  for (std::size_t i = 0; i < rays.size() && first.size() < k; ++i)
    if (ech.add(rays[i])) first.push_back(i);
  if (first.size() != k) reject("hilbert", "rays do not span the cone", ErrorCode::Internal);
  std::vector<Simplex> simplices{first};
  if (k == 1) return simplices;

  std::set<std::size_t> placed(first.begin(), first.end());
  std::map<Simplex, BigVec> normals;  // facet -> normal, up to sign
  auto normalOf = [&](const Simplex& facet) -> const BigVec& {
    auto it = normals.find(facet);
    if (it != normals.end()) return it->second;
    std::vector<BigVec> rows;
    for (auto j : facet) rows.push_back(rays[j]);
    auto ns = exact::nullspace(rows, k);
    if (ns.size() != 1) reject("hilbert", "degenerate facet", ErrorCode::Internal);
    return normals.emplace(facet, ns.front()).first->second;
  };

  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (placed.count(i)) continue;
    // facets used by exactly one simplex form the boundary
    std::map<Simplex, std::pair<int, std::size_t>> facets;  // -> (count, opposite vertex)
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < k; ++drop) {
        Simplex f;
        for (std::size_t t = 0; t < k; ++t)
          if (t != drop) f.push_back(s[t]);
        auto& slot = facets[f];
        ++slot.first;
        slot.second = s[drop];
      }
    std::vector<Simplex> added;
    for (const auto& [f, info] : facets) {
      if (info.first != 1) continue;
      const auto& n = normalOf(f);
      BigInt inside = dotQ(n, rays[info.second]);
      BigInt here = dotQ(n, rays[i]);
      if (sgn(inside) * sgn(here) < 0) {
        Simplex s = f;
        s.push_back(i);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
    placed.insert(i);
  }
  return simplices;
}

}  // namespace

HilbertBasis hilbertBasis(const RationalCone& cone, std::span<const Int> grading,
                          Int parallelepiped_cap) {
  const auto d = static_cast<std::size_t>(cone.ambient_dim);
  if (!cone.pointed) reject("hilbert", "cone is not pointed");
  if (grading.size() != d) reject("hilbert", "grading dimension mismatch");
  HilbertBasis result;
  if (cone.rays.empty()) return result;
  for (const auto& r : cone.rays)
    if (exact::dot(grading, r) <= 0)
      reject("hilbert", "grading is not positive on ray (" + joinInts(r) + ")");

  std::vector<BigVec> rays;
  for (const auto& r : cone.rays) rays.push_back(exact::toBig(r));
  const std::size_t k = exact::rank(rays, d);

  // lattice basis of Z^d intersected with span(cone)
  std::vector<BigVec> basis;
  if (k == d) {
    for (std::size_t i = 0; i < d; ++i) {
      BigVec e(d, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    auto perp = exact::nullspace(rays, d);
    std::vector<BigVec> columns(d, BigVec(perp.size()));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < perp.size(); ++p) columns[j][p] = perp[p][j];
    basis = exact::integerKernel(columns, perp.size());
  }
  if (basis.size() != k) reject("hilbert", "lattice basis has the wrong rank", ErrorCode::Internal);

  std::vector<BigVec> coords;  // rays in lattice coordinates
  for (const auto& r : rays) {
    auto c = exact::solve(basis, r);
    if (!c) reject("hilbert", "ray outside its own span", ErrorCode::Internal);
    BigVec v;
    for (const auto& x : *c) {
      if (x.get_den() != 1) reject("hilbert", "non-integral lattice coordinates", ErrorCode::Internal);
      v.push_back(x.get_num());
    }
    coords.push_back(std::move(v));
  }

  const auto simplices = triangulate(coords, k);
  result.simplices = simplices.size();

  std::set<IntVec> candidates(cone.rays.begin(), cone.rays.end());
  for (const auto& s : simplices) {
    Int degree = 0;
    for (auto j : s) degree += exact::dot(grading, cone.rays[j]);
    result.degree_bound = std::max(result.degree_bound, degree);

    std::vector<QVec> m(k, QVec(k));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < k; ++r) m[r][c] = coords[s[c]][r];
    const Rational det = exact::determinant(m);
    BigInt D = abs(det.get_num());
    if (D == 1) continue;
    if (D > parallelepiped_cap)
      reject("hilbert", "simplex index " + D.get_str() + " exceeds cap", ErrorCode::CapExceeded);
    auto inv = exact::inverse(m);
    const Int Dl = D.get_si();
    // generators of Z^k / M Z^k as vectors D * M^{-1} e_j mod D
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < k; ++j) {
      IntVec g(k);
      for (std::size_t r = 0; r < k; ++r) {
        Rational x = (*inv)[r][j] * D;
        BigInt v = x.get_num() % D;
        if (v < 0) v += D;
        g[r] = v.get_si();
      }
      gens.push_back(std::move(g));
    }
    std::set<IntVec> group{IntVec(k, 0)};
    std::vector<IntVec> frontier{IntVec(k, 0)};
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          IntVec y(k);
          for (std::size_t r = 0; r < k; ++r) y[r] = (x[r] + g[r]) % Dl;
          if (group.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    if (static_cast<Int>(group.size()) != Dl)
      reject("hilbert", "parallelepiped group has the wrong order", ErrorCode::Internal);
    for (const auto& c : group) {
      // lattice point sum_j (c_j / D) * ray_j
      BigVec x(d, 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < d; ++t) x[t] += c[j] * rays[s[j]][t];
      bool zero = true;
      for (auto& v : x) {
        if (!mpz_divisible_p(v.get_mpz_t(), D.get_mpz_t()))
          reject("hilbert", "non-integral parallelepiped point", ErrorCode::Internal);
        v /= D;
        zero &= v == 0;
      }
      if (!zero) candidates.insert(exact::toInt(x, "hilbert"));
    }
  }
  result.candidates = candidates.size();

  std::vector<std::pair<Int, IntVec>> order;
  for (const auto& c : candidates) order.emplace_back(exact::dot(grading, c), c);
  std::sort(order.begin(), order.end());
  std::vector<std::pair<Int, IntVec>> kept;
  for (const auto& [deg, x] : order) {
    bool reducible = false;
    for (const auto& [hd, h] : kept) {
      if (hd >= deg) break;
      IntVec diff(d);
      for (std::size_t t = 0; t < d; ++t) diff[t] = x[t] - h[t];
      if (cone.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.emplace_back(deg, x);
  }
  for (auto& [deg, x] : kept) result.elements.push_back(std::move(x));
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

}  // namespace sc
