#pragma once

// Parametric polytopes P_q = {x : A x <= E q + f}, q in Q, and pointwise
// evaluation of c(q) = |P_q cap Z^d|.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latcount/genfun.hpp"

namespace latcount {

struct ParametricPolytope {
  IntMatrix A;  // m x d
  IntMatrix E;  // m x p
  IntVector f;  // m
  HalfOpenPolyhedron Q;  // closed rows g.q <= h; no rows means R^p

  std::size_t dimension() const { return A.cols(); }
  std::size_t num_constraints() const { return A.rows(); }
  std::size_t num_params() const { return E.cols(); }

  /// True iff q satisfies every row of Q.
  bool in_parameter_space(const RatVector& q) const;
  /// Right-hand side E q + f.
  RatVector rhs(const RatVector& q) const;
  /// P_q as an integer H-polytope (row denominators cleared).
  HPolytope instantiate(const RatVector& q) const;
};

/// Throws SemanticError unless the shapes agree and p >= 1.
void validate(const ParametricPolytope& pp);

struct ParametricVertex {
  std::vector<std::size_t> basis;       // d row indices, ascending
  RatMatrix M;                          // d x p
  RatVector c;                          // d
  std::vector<std::size_t> tight_rows;  // rows with A_r v(q) = E_r q + f_r for all q
  HalfOpenPolyhedron activity;          // closed, inside Q, redundant rows removed
  bool activity_full_dimensional = false;
  ClosedCone cone;                      // {x : A_T x <= 0}, apex 0
  bool cone_full_dimensional = false;

  RatVector at(const RatVector& q) const;
};

/// One vertex per distinct affine map, over all bases feasible for some q in
/// Q. Sorted by basis. Throws SemanticError if A does not have full column
/// rank or P_q is unbounded.
std::vector<ParametricVertex> enumerate_parametric_vertices(const ParametricPolytope& pp);

struct Chamber {
  HalfOpenPolyhedron region;
  std::vector<std::size_t> vertices;  // indices into the vertex list, ascending
};

/// Closed full-dimensional chambers on which P_q is nonempty, each with its
/// active vertices. Their closures cover {q in Q : P_q nonempty} up to
/// lower-dimensional sets and have pairwise disjoint interiors.
std::vector<Chamber> chambers_max_dim(const std::vector<ParametricVertex>& vertices,
                                      const HalfOpenPolyhedron& Q, std::size_t num_params);

/// Generic point for the half-open rules: an interior point of the first
/// region, moved by gamma (gamma, gamma^2, ...) for gamma = 1, 1/2, ... until
/// it lies strictly inside that region and on no row hyperplane of any region.
RatVector choose_parameter_point(const std::vector<const HalfOpenPolyhedron*>& regions,
                                 std::size_t num_params);

/// Half-open chambers: a row n.q <= b becomes strict iff <n, y_q> > b.
/// Throws SemanticError("y not generic") if y_q lies on a row hyperplane.
std::vector<Chamber> halfopen_chambers(const std::vector<Chamber>& chambers, const RatVector& y_q);

/// Half-open activity regions of the vertices with full-dimensional
/// activity, by the same rule.
std::vector<std::pair<std::size_t, HalfOpenPolyhedron>> halfopen_activity_regions(
    const std::vector<ParametricVertex>& vertices, const RatVector& y_q);

struct Evaluation {
  Int count;
  std::string diagnostic;  // empty when the count is meaningful
};

/// Precomputed counting data for one parametric polytope. Construction does
/// all work that does not depend on q; evaluation only instantiates
/// parallelepiped numerators, and is safe to call concurrently.
class ParametricCounter {
 public:
  explicit ParametricCounter(ParametricPolytope pp, const Int& max_index = 1, long first_m = 1);

  const ParametricPolytope& polytope() const { return pp_; }
  const std::vector<ParametricVertex>& vertices() const { return vertices_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const std::vector<Chamber>& halfopen() const { return halfopen_; }
  const std::vector<std::pair<std::size_t, HalfOpenPolyhedron>>& halfopen_activity() const {
    return activity_;
  }
  const RatVector& parameter_point() const { return y_q_; }
  const IntVector& direction() const { return mu_; }
  /// Decomposition of the (apex 0) cone of a vertex; nullptr if unused.
  const SignedConeSum* decomposition(std::size_t vertex) const;
  std::size_t num_cones() const;
  std::size_t max_depth() const { return max_depth_; }

  /// Half-open chamber representation.
  Evaluation evaluate(const RatVector& q) const;
  /// Half-open activity-region representation.
  Evaluation evaluate_by_activity(const RatVector& q) const;
  /// Closed-chamber formula of one chamber; valid on its closure.
  Evaluation evaluate_in_chamber(std::size_t chamber, const RatVector& q) const;

 private:
  struct VertexData {
    SignedConeSum cones;
    std::vector<ParallelepipedEnumerator> enumerators;
  };

  Rat vertex_sum(std::size_t vertex, const RatVector& q) const;
  Evaluation sum_over(const std::vector<std::size_t>& vertices, const RatVector& q) const;
  std::optional<std::string> outside(const RatVector& q) const;

  ParametricPolytope pp_;
  std::vector<ParametricVertex> vertices_;
  std::vector<Chamber> chambers_;
  std::vector<Chamber> halfopen_;
  std::vector<std::pair<std::size_t, HalfOpenPolyhedron>> activity_;
  RatVector y_q_;
  std::vector<std::optional<VertexData>> data_;
  IntVector mu_;
  std::size_t max_depth_ = 0;
};

/// c(q0) through the half-open chamber representation.
Evaluation evaluate_count(const ParametricPolytope& pp, const RatVector& q0, const Int& max_index = 1);

}  // namespace latcount
