#pragma once

#include <cstddef>
#include <vector>

#include "latcount/arith.hpp"

namespace latcount {

/// {x in R^d : A x <= b}.
struct HPolytope {
  IntMatrix A;
  IntVector b;

  std::size_t dimension() const { return A.cols(); }
  std::size_t num_constraints() const { return A.rows(); }
  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;
};

struct Vertex {
  RatVector point;
  std::vector<std::size_t> tight_rows;  // ascending
};

/// apex + cone(rays). Rays are primitive; each facet normal n satisfies
/// <n, x - apex> <= 0 on the cone.
struct ClosedCone {
  RatVector apex;
  std::vector<IntVector> rays;
  std::vector<IntVector> facet_normals;

  std::size_t dimension() const { return apex.size(); }
};

/// apex + cone(b_1..b_d) with d linearly independent primitive rays and the
/// biorthogonal outer normals: <dual_normals[j], rays[i]> = -delta_ij.
struct SimplicialCone {
  RatVector apex;
  std::vector<IntVector> rays;
  std::vector<RatVector> dual_normals;

  static SimplicialCone from_rays(RatVector apex, std::vector<IntVector> rays);

  std::size_t dimension() const { return rays.size(); }
  /// Matrix with the rays as columns.
  IntMatrix ray_matrix() const;
  Int index() const;
  /// lambda with x - apex = sum_j lambda_j rays[j].
  RatVector coefficients(const RatVector& x) const;
};

/// Extreme rays of the pointed cone {x : G x <= 0} (G of full column rank),
/// by the double description method. Rays are primitive and sorted.
std::vector<IntVector> extreme_rays(const IntMatrix& G);

/// Throws SemanticError when P is unbounded or not full-dimensional; returns
/// an empty list when P is empty. Sorted lexicographically by point.
std::vector<Vertex> enumerate_vertices(const HPolytope& P);

/// Throws SemanticError("polyhedron unbounded") if {A x <= 0} != {0}.
void check_bounded(const IntMatrix& A);

/// Cone of feasible directions at v, apex v.
ClosedCone vertex_cone(const HPolytope& P, const Vertex& v);

/// Closed cone {x : <n, x - apex> <= 0 for n in normals}.
ClosedCone cone_from_normals(RatVector apex, const std::vector<IntVector>& normals);

/// Placing triangulation over the cone's rays, deterministic in ray order.
/// Throws SemanticError for cones that are not full-dimensional and pointed.
std::vector<SimplicialCone> triangulate(const ClosedCone& C);

/// Exact membership in a closed cone via its facet normals.
bool cone_contains(const ClosedCone& C, const RatVector& x);

}  // namespace latcount
