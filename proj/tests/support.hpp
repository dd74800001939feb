#pragma once

// Random instance generators and a fast membership test shared by the unit
// and acceptance tests.

#include <optional>
#include <random>
#include <set>

#include "latcount/lp.hpp"
#include "latcount/oracle.hpp"
#include "latcount/parametric.hpp"

namespace latcount::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// n/d in lowest terms; GMP needs canonical operands.
inline Rat rat(long n, long d) {
  Rat x(n, d);
  x.canonicalize();
  return x;
}

inline IntVector random_vector(Rng& rng, std::size_t d, long lo, long hi) {
  IntVector v(d);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

/// Random {A x <= b} with entries in [-9, 9]. Returns nullopt unless the
/// polytope is bounded, full-dimensional and its bounding box has at most
/// `cap` points.
inline std::optional<HPolytope> random_polytope(Rng& rng, std::size_t d, std::uint64_t cap) {
  const std::size_t m = d + 1 + uniform(rng, 0, 3);
  HPolytope P{IntMatrix(m, d), IntVector(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) P.A(i, j) = uniform(rng, -9, 9);
    P.b[i] = uniform(rng, -9, 9);
  }
  try {
    check_bounded(P.A);
  } catch (const SemanticError&) {
    return std::nullopt;
  }
  RatVector b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = P.b[i];
  if (!lp::full_dimensional(to_rat(P.A), b)) return std::nullopt;
  if (bounding_box(P).volume() > cap) return std::nullopt;
  return P;
}

/// Primitive rays with entries in [-range, range] and |det| in [min_index, max_index].
inline std::vector<IntVector> random_rays(Rng& rng, std::size_t d, long range, const Int& min_index,
                                          const Int& max_index) {
  for (;;) {
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < d; ++i) {
      IntVector r = random_vector(rng, d, -range, range);
      if (is_zero(r)) break;
      rays.push_back(primitive(r));
    }
    if (rays.size() != d) continue;
    Int D = abs(det(IntMatrix::from_columns(rays)));
    if (D >= min_index && D <= max_index) return rays;
  }
}

inline RatVector random_apex(Rng& rng, std::size_t d) {
  RatVector a(d);
  for (auto& x : a) x = rat(uniform(rng, -12, 12), uniform(rng, 1, 4));
  return a;
}

inline HalfOpenCone random_halfopen_cone(Rng& rng, std::size_t d, long range, const Int& min_index,
                                         const Int& max_index, bool rational_apex = true) {
  RatVector apex = rational_apex ? random_apex(rng, d) : RatVector(d, Rat(0));
  std::vector<int> sigma(d);
  for (auto& s : sigma) s = uniform(rng, 0, 1) ? 1 : -1;
  return {SimplicialCone::from_rays(std::move(apex), random_rays(rng, d, range, min_index, max_index)),
          std::move(sigma)};
}

/// Pointed full-dimensional cone {x : <n, x - apex> <= 0} from random normals.
inline ClosedCone random_pointed_cone(Rng& rng, std::size_t d, const RatVector& apex) {
  for (;;) {
    const std::size_t m = d + uniform(rng, 0, 3);
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < m; ++i) normals.push_back(random_vector(rng, d, -4, 4));
    IntMatrix G = IntMatrix::from_rows(normals);
    if (rank(G) != d) continue;
    if (!lp::full_dimensional(to_rat(G), RatVector(m, Rat(0)))) continue;
    return cone_from_normals(apex, normals);
  }
}

/// Membership in a half-open cone with 128-bit integer arithmetic; exact as
/// long as the inputs stay small (checked on construction).
class FastCone {
 public:
  explicit FastCone(const HalfOpenCone& c) : sigma_(c.sigma) {
    const std::size_t d = c.dimension();
    for (std::size_t j = 0; j < d; ++j) {
      // lambda_j(x) = -<n_j, x> + <n_j, apex>; scale to -<N, x> q + p over a
      // positive common denominator.
      const RatVector& n = c.base.dual_normals[j];
      Int den = 1;
      for (const auto& x : n) den = lcm(den, Int(x.get_den()));
      IntVector N(d);
      for (std::size_t i = 0; i < d; ++i) N[i] = Rat(n[i] * den).get_num();
      Rat na = dot(N, c.base.apex);
      std::vector<__int128> row(d + 1);
      for (std::size_t i = 0; i < d; ++i) row[i] = -to_i128(N[i] * na.get_den());
      row[d] = to_i128(na.get_num());
      rows_.push_back(std::move(row));
    }
  }

  /// Integer point.
  bool contains(const std::vector<long>& x) const {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      __int128 s = rows_[j].back();
      for (std::size_t i = 0; i < x.size(); ++i) s += rows_[j][i] * x[i];
      if (sigma_[j] > 0 ? s < 0 : s <= 0) return false;
    }
    return true;
  }

 private:
  static __int128 to_i128(const Int& v) {
    if (!v.fits_slong_p()) throw Error("FastCone: coefficient too large");
    return v.get_si();
  }
  std::vector<int> sigma_;
  std::vector<std::vector<__int128>> rows_;
};

/// Points apex + sum lambda_j b_j with some lambda_j forced to 0 (facet
/// points), plus random integer and rational points around the apex.
inline RatVector sample_near_cone(Rng& rng, const RatVector& apex, const std::vector<IntVector>& rays) {
  const std::size_t d = apex.size();
  const long mode = uniform(rng, 0, 3);
  RatVector x(d);
  if (mode == 0) {
    for (std::size_t i = 0; i < d; ++i) x[i] = apex[i] + uniform(rng, -6, 6);
    return x;
  }
  if (mode == 1) {
    for (std::size_t i = 0; i < d; ++i) x[i] = apex[i] + rat(uniform(rng, -24, 24), uniform(rng, 1, 4));
    return x;
  }
  x = apex;
  for (const auto& r : rays) {
    long c = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, mode == 2 ? 0 : -3, 3);
    Rat lam = rat(c, uniform(rng, 1, 3));
    for (std::size_t i = 0; i < d; ++i) x[i] += lam * r[i];
  }
  return x;
}

/// t * (standard simplex), t >= 0.
inline ParametricPolytope dilated_simplex(std::size_t d) {
  ParametricPolytope pp{IntMatrix(d + 1, d, Int(0)), IntMatrix(d + 1, 1, Int(0)), IntVector(d + 1, Int(0)), {}};
  for (std::size_t i = 0; i < d; ++i) pp.A(i, i) = -1;
  for (std::size_t j = 0; j < d; ++j) pp.A(d, j) = 1;
  pp.E(d, 0) = 1;
  pp.Q.add_row({Int(-1)}, 0);
  return pp;
}

/// P_q = {x : x >= 0, 2x <= q + 6, x <= q}.
inline ParametricPolytope segment_family() {
  ParametricPolytope pp{IntMatrix{{-1}, {2}, {1}}, IntMatrix{{0}, {1}, {1}}, IntVector{0, 6, 0}, {}};
  return pp;
}

}  // namespace latcount::testing
