#include <bit>
#include <cstdint>
#include <optional>

#include "stringcone/polyhedra.hpp"

namespace sc::dd {

using exact::BigInt;
using exact::BigVec;

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulMod(r, a);
    a = mulMod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const BigInt& x) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(x.get_mpz_t(), kPrime);
}

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  void grow(std::size_t n) { w_.resize((n + 63) / 64, 0); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  bool subsetOf(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  template <class F>
  void forEach(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Row {
  BigVec big;
  std::optional<IntVec> small;
  std::vector<std::uint64_t> mod;
};

struct Ray {
  BigVec v;
  std::optional<IntVec> small;
  Bits zeros;
};

std::optional<IntVec> fits(const BigVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    // keep headroom so 128-bit accumulation cannot overflow for moderate dims
    if (!x.fits_slong_p() || abs(x) > BigInt(1) << 40) return std::nullopt;
    out.push_back(x.get_si());
  }
  return out;
}

// sign and value of <row, ray>
BigInt evaluate(const Row& row, const Ray& ray) {
  if (row.small && ray.small) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < row.small->size(); ++k)
      acc += static_cast<__int128>((*row.small)[k]) * (*ray.small)[k];
    if (acc >= INT64_MIN && acc <= INT64_MAX) return BigInt(static_cast<long>(acc));
  }
  return exact::dot(row.big, ray.v);
}

Ray makeRay(BigVec v) {
  exact::makePrimitive(v);
  Ray r;
  r.small = fits(v);
  r.v = std::move(v);
  return r;
}

std::size_t rankMod(const std::vector<const Row*>& rows, std::size_t dim, std::size_t target) {
  std::vector<std::vector<std::uint64_t>> basis;  // echelon rows with pivot 1
  std::vector<std::size_t> pivots;
  for (const Row* r : rows) {
    auto v = r->mod;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t c = v[pivots[b]];
      if (!c) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        if (!basis[b][k]) continue;
        std::uint64_t sub = mulMod(c, basis[b][k]);
        v[k] = v[k] >= sub ? v[k] - sub : v[k] + kPrime - sub;
      }
    }
    std::size_t p = dim;
    for (std::size_t k = 0; k < dim; ++k)
      if (v[k]) {
        p = k;
        break;
      }
    if (p == dim) continue;
    const std::uint64_t inv = powMod(v[p], kPrime - 2);
    for (auto& x : v) x = mulMod(x, inv);
    basis.push_back(std::move(v));
    pivots.push_back(p);
    if (basis.size() >= target) break;
  }
  return basis.size();
}

std::size_t rankExact(const std::vector<const Row*>& rows, std::size_t dim, std::size_t target) {
  exact::RowEchelon ech(dim);
  for (const Row* r : rows) {
    ech.add(r->big);
    if (ech.rank() >= target) break;
  }
  return ech.rank();
}

}  // namespace

Result extremeRays(const std::vector<BigVec>& input, std::size_t dim) {
  Result result;
  std::vector<Row> rows;
  rows.reserve(input.size());
  for (const auto& v : input) {
    if (v.size() != dim) reject("dd", "row dimension mismatch", ErrorCode::Internal);
    bool zero = true;
    for (const auto& x : v) zero &= x == 0;
    if (zero) continue;
    Row r;
    r.big = v;
    r.small = fits(v);
    r.mod.reserve(dim);
    for (const auto& x : v) r.mod.push_back(reduce(x));
    rows.push_back(std::move(r));
  }

  // initial simplicial cone on a maximal independent prefix-greedy set
  exact::RowEchelon ech(dim);
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rows.size() && ech.rank() < dim; ++i)
    if (ech.add(rows[i].big)) basis.push_back(i);
  const std::size_t r = basis.size();
  {
    std::vector<BigVec> b;
    for (auto i : basis) b.push_back(rows[i].big);
    result.lineality = exact::nullspace(b, dim);
  }
  if (r == 0) return result;

  std::vector<exact::QVec> gram(r, exact::QVec(r));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) gram[a][b] = exact::dot(rows[basis[a]].big, rows[basis[b]].big);
  auto inv = exact::inverse(gram);
  if (!inv) reject("dd", "singular Gram matrix", ErrorCode::Internal);

  const std::size_t m = rows.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < r; ++k) {
    exact::QVec x(dim, 0);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& c = (*inv)[j][k];
      if (c == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) x[t] += c * rows[basis[j]].big[t];
    }
    Ray ray = makeRay(exact::clearDenominators(x));
    ray.zeros = Bits(m);
    for (std::size_t j = 0; j < r; ++j)
      if (j != k) ray.zeros.set(basis[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<char> processed(m, 0);
  for (auto i : basis) processed[i] = 1;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i)
    if (!processed[i]) order.push_back(i);

  const std::size_t need = r >= 2 ? r - 2 : 0;
  for (std::size_t i : order) {
    const Row& row = rows[i];
    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = evaluate(row, rays[k]);
      const int s = sgn(val[k]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(k);
    }
    processed[i] = 1;
    if (neg.empty()) {
      for (auto k : zer) rays[k].zeros.set(i);
      continue;
    }

    std::vector<Ray> created;
    for (auto p : pos) {
      for (auto n : neg) {
        Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() < need) continue;
        // a third ray in the common face rules out adjacency
        bool witness = false;
        for (std::size_t k = 0; k < rays.size() && !witness; ++k)
          if (k != p && k != n && common.subsetOf(rays[k].zeros)) witness = true;
        if (witness) continue;
        if (need > 0) {
          std::vector<const Row*> sub;
          common.forEach([&](std::size_t j) { sub.push_back(&rows[j]); });
          if (rankMod(sub, dim, need) < need && rankExact(sub, dim, need) < need)
            reject("dd", "adjacency certificate failed", ErrorCode::Internal);
        }
        BigVec v(dim);
        for (std::size_t t = 0; t < dim; ++t) v[t] = val[p] * rays[n].v[t] - val[n] * rays[p].v[t];
        Ray ray = makeRay(std::move(v));
        ray.zeros = common;
        ray.zeros.set(i);
        created.push_back(std::move(ray));
      }
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size() + created.size());
    std::vector<char> keep(rays.size(), 0);
    for (auto k : pos) keep[k] = 1;
    for (auto k : zer) {
      keep[k] = 1;
      rays[k].zeros.set(i);
    }
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (keep[k]) next.push_back(std::move(rays[k]));
    for (auto& c : created) next.push_back(std::move(c));
    rays = std::move(next);
  }

  for (auto& ray : rays) result.rays.push_back(std::move(ray.v));
  return result;
}

}  // namespace sc::dd
