#pragma once

// Half-open polyhedra and cones, and the exact (boundary-free) versions of
// triangulation and Barvinok's signed decomposition.
//
// A linear identity of indicator functions that only holds modulo
// lower-dimensional pieces becomes exact once every facet of every
// full-dimensional piece is declared weak or strict according to the sign of
// its normal against one common generic vector y: weak where <n, y> < 0,
// strict where <n, y> > 0.

#include <cstddef>
#include <utility>
#include <vector>

#include "latcount/polytope.hpp"

namespace latcount {

/// sigma_j = +1: facet opposite ray j is weak (lambda_j >= 0);
/// sigma_j = -1: strict (lambda_j > 0).
struct HalfOpenCone {
  SimplicialCone base;
  std::vector<int> sigma;

  static HalfOpenCone closed(SimplicialCone base);

  std::size_t dimension() const { return base.dimension(); }
  Int index() const { return base.index(); }
  bool contains(const RatVector& x) const;
};

struct HalfOpenPolyhedron {
  struct Row {
    IntVector normal;
    Rat rhs;
    bool strict = false;
  };
  std::vector<Row> rows;

  std::size_t dimension() const { return rows.empty() ? 0 : rows.front().normal.size(); }
  bool contains(const RatVector& x) const;
  bool contains_closure(const RatVector& x) const;
  /// Closure as {A x <= b}.
  std::pair<RatMatrix, RatVector> closure_system(std::size_t dim) const;
  void add_row(IntVector normal, Rat rhs, bool strict = false);
};

struct SignedConeSum {
  struct Term {
    int sign = 1;
    HalfOpenCone cone;
  };
  std::vector<Term> terms;

  /// sum_i eps_i [C_i](x).
  long evaluate(const RatVector& x) const;
  /// Sorts terms into a canonical order (rays, sigma, sign).
  void canonicalize();
};

/// Recursion statistics of signed_decompose.
struct DecompositionStats {
  std::size_t max_depth = 0;
  std::size_t nodes = 0;
  bool strict_descent = true;  // every child index < its parent's index
};

/// Weighted pieces of an identity of indicator functions.
using WeightedPieces = std::vector<std::pair<Rat, HalfOpenPolyhedron>>;

/// Applies the weak/strict rule with direction y to every row of every
/// (closed) piece. Throws SemanticError("y not generic") on a zero product.
WeightedPieces exactify(const WeightedPieces& pieces, const RatVector& y);

/// Point variant used for parameter spaces: a row <n, x> <= beta is made
/// strict iff <n, point> > beta. For pieces through the origin this is
/// exactify with y = point. Throws if the point lies on a row's hyperplane.
WeightedPieces exactify_toward(const WeightedPieces& pieces, const RatVector& point);

/// y = sum_i (1 + gamma^i) b_i for the first gamma in 1, 1/2, 1/4, ... that
/// has a nonzero product with every normal.
RatVector choose_triangulation_y(const std::vector<IntVector>& rays,
                                 const std::vector<RatVector>& normals);

/// Exact partition of a closed pointed full-dimensional cone into half-open
/// simplicial cones.
std::vector<HalfOpenCone> halfopen_triangulate(const ClosedCone& C);

/// Strictness flag of facet l (0 = the facet opposite w) of the child that
/// replaces ray m by w; indices are 1-based as in the ray numbering.
/// Throws SemanticError("degenerate child, discard") when alpha_m = 0.
int facet_strictness(const std::vector<int>& sigma, const RatVector& alpha, std::size_t l,
                     std::size_t m);

struct ExtraRay {
  IntVector w;
  RatVector alpha;  // w = sum_i alpha_i b_i
};

/// Short integer vector w in the lattice spanned by the rays' dual basis, so
/// that replacing any ray b_m with alpha_m != 0 by w strictly lowers the
/// index. Oriented so that some alpha_i > 0.
ExtraRay find_w(const IntMatrix& rays_as_columns);

/// Exact signed decomposition into half-open cones of index <= max_index.
SignedConeSum signed_decompose(const HalfOpenCone& cone, const Int& max_index = 1,
                               DecompositionStats* stats = nullptr);

/// halfopen_triangulate followed by signed_decompose of every piece.
SignedConeSum decompose_cone(const ClosedCone& C, const Int& max_index = 1,
                             DecompositionStats* stats = nullptr);

}  // namespace latcount
