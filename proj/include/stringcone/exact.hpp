#pragma once

// Exact integer and rational linear algebra over GMP.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "stringcone/common.hpp"

namespace sc::exact {

using BigInt = mpz_class;
using Rational = mpq_class;
using BigVec = std::vector<BigInt>;
using QVec = std::vector<Rational>;

BigVec toBig(std::span<const Int> v);
// Throws Error(Internal) naming `stage` when an entry does not fit in 64 bits.
IntVec toInt(const BigVec& v, const char* stage);

BigInt dot(const BigVec& a, const BigVec& b);
// 64-bit dot product with 128-bit accumulation; throws on overflow.
Int dot(std::span<const Int> a, std::span<const Int> b);

// Divides by the content (gcd of entries). The zero vector is left unchanged.
void makePrimitive(BigVec& v);
IntVec primitive(IntVec v);
// Clears denominators and returns the primitive integer multiple.
BigVec clearDenominators(const QVec& v);

// Incremental row echelon form over Q. add() reports whether the row was
// independent of the rows already accepted.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  bool add(const BigVec& row);
  bool add(std::span<const Int> row) { return add(toBig(row)); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // Reduced row echelon rows (pivot entries 1, zeros above and below).
  std::vector<QVec> reduced() const;
  std::vector<std::size_t> pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<QVec> rows_;  // pivot normalized to 1, zero in other pivot columns
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<BigVec>& rows, std::size_t dim);

// Canonical basis of {x : row . x = 0 for all rows}, one primitive integer
// vector per free column of the reduced echelon form (free entry positive).
std::vector<BigVec> nullspace(const std::vector<BigVec>& rows, std::size_t dim);

// Solves sum_j coeffs_j * columns[j] = target; nullopt when inconsistent.
// When the columns are dependent an arbitrary solution is returned.
std::optional<QVec> solve(const std::vector<BigVec>& columns, const BigVec& target);

Rational determinant(std::vector<QVec> m);
std::optional<std::vector<QVec>> inverse(std::vector<QVec> m);

// Row Hermite normal form of the lattice spanned by `rows`: nonzero rows only,
// positive pivots, entries above each pivot reduced into [0, pivot).
std::vector<BigVec> hermiteNormalForm(std::vector<BigVec> rows);

// Basis of {v in Z^K : sum_i v_i * vectors[i] = 0}, where K = vectors.size(),
// computed by unimodular row reduction and returned in Hermite normal form.
std::vector<BigVec> integerKernel(const std::vector<BigVec>& vectors, std::size_t dim);

}  // namespace sc::exact
