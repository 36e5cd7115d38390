#pragma once

// Exact polyhedral machinery for pointed rational cones: double description,
// sections at fixed lambda, faces, Hilbert bases, and saturation checks.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stringcone/exact.hpp"
#include "stringcone/strings.hpp"

namespace sc {

// Both descriptions of a cone C in R^d, canonical: primitive integer vectors,
// sorted lexicographically, no duplicates.
//  - rays: extreme rays, plus +-v for a basis v of the lineality space when
//    the cone is not pointed. Rays lie in the orthogonal complement of the
//    lineality space.
//  - facets: normals u of irredundant inequalities <u, x> >= 0, plus +-u for
//    a basis u of the orthogonal complement of span(C) when C is not
//    full-dimensional. Facet normals lie in span(C).
struct RationalCone {
  int ambient_dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> facets;
  bool pointed = true;

  bool contains(std::span<const Int> x) const;
  std::size_t dimension() const;
};

namespace dd {

struct Result {
  std::vector<exact::BigVec> lineality;  // canonical basis of {x : A x = 0}
  std::vector<exact::BigVec> rays;       // extreme rays, orthogonal to lineality
};

// Double description of {x in R^dim : <row, x> >= 0 for every row}.
// Rows are inserted in the given order; two rays are combined only when the
// processed rows vanishing on both have rank dim(cone) - 2.
Result extremeRays(const std::vector<exact::BigVec>& rows, std::size_t dim);

}  // namespace dd

// Rejects an empty point set. `points` must share one dimension.
RationalCone conicHull(const std::vector<IntVec>& points);
// Cone {x : <u, x> >= 0 for u in inequalities}.
RationalCone coneFromInequalities(const std::vector<IntVec>& inequalities, int dim);
// Swaps rays and facets (the polar dual).
RationalCone dualize(const RationalCone& cone);

// Integer psi with (lambda, psi) in the cone, sorted. The ambient dimension
// is lambda.size() + N. Throws Error(Unbounded) with a recession direction
// when the section is unbounded.
std::vector<IntVec> latticePointsInSection(const RationalCone& cone, const std::vector<int>& lambda);

struct FaceCheck {
  bool is_face = false;
  IntVec normal;  // supporting normal when is_face; zero for the whole cone
};

// True iff the cone spanned by `points` is a face of `cone`.
FaceCheck isFace(const RationalCone& cone, const std::vector<IntVec>& points);

struct HilbertBasis {
  std::vector<IntVec> elements;  // sorted
  Int degree_bound = 0;          // every generator has degree below this
  std::size_t candidates = 0;
  std::size_t simplices = 0;
};

// Minimal generating set of the semigroup of integral points of a pointed
// cone. Candidates are the rays and the lattice points of the half-open
// fundamental parallelepipeds of a placing triangulation; they are scanned in
// order of increasing degree and kept iff not reducible by a lower-degree
// generator.
HilbertBasis hilbertBasis(const RationalCone& cone, std::span<const Int> grading,
                          Int parallelepiped_cap = 2'000'000);

struct SectionCount {
  Weight lambda;
  std::size_t cone_points = 0;
  std::size_t data_points = 0;
};

struct SaturationReport {
  int level = 0;
  bool equal = true;
  std::vector<WeightedPoint> missing_from_data;  // cone point missing from data
  std::vector<WeightedPoint> missing_from_cone;  // data point outside the cone
  std::vector<SectionCount> sections;
};

// Compares the cone sections with the enumerated points for every dominant
// lambda with coordinates <= level_bound.
SaturationReport saturationCheck(const RationalCone& cone,
                                 const std::vector<WeightedPoint>& enumerated, int level_bound,
                                 int rank, int threads = 1);

// "dim d" header line followed by one vector per line, space separated.
std::string formatVectors(int dim, const std::vector<IntVec>& rows);
std::pair<int, std::vector<IntVec>> parseVectors(const std::string& text);

}  // namespace sc
