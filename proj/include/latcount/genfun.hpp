#pragma once

// Rational generating functions of half-open simplicial affine cones and
// their evaluation at z = 1.

#include <cstddef>
#include <vector>

#include "latcount/halfopen.hpp"

namespace latcount {

/// sign * (sum_{a in numerator} z^a) / prod_j (1 - z^{b_j}).
struct GenFunTerm {
  int sign = 1;
  std::vector<IntVector> numerator;
  std::vector<IntVector> denominator;
};

struct GenFun {
  std::vector<GenFunTerm> terms;
};

/// Lattice points of the half-open fundamental parallelepiped of a cone,
/// for any apex. The Smith normal form of the ray matrix is computed once,
/// so one enumerator serves every apex of a parametric vertex.
class ParallelepipedEnumerator {
 public:
  explicit ParallelepipedEnumerator(const HalfOpenCone& cone);

  std::vector<IntVector> points(const RatVector& apex) const;
  const Int& size() const { return size_; }

 private:
  std::vector<IntVector> rays_;
  std::vector<RatVector> duals_;
  std::vector<int> sigma_;
  std::vector<IntVector> residues_;  // W k for 0 <= k_j < s_j
  Int size_;
};

std::vector<IntVector> parallelepiped_points(const HalfOpenCone& cone, const RatVector& apex);
inline std::vector<IntVector> parallelepiped_points(const HalfOpenCone& cone) {
  return parallelepiped_points(cone, cone.base.apex);
}

GenFunTerm gf_term(const HalfOpenCone& cone, const RatVector& apex, int sign = 1);
inline GenFunTerm gf_term(const HalfOpenCone& cone) { return gf_term(cone, cone.base.apex); }

/// Integer direction mu with <mu, b> != 0 for every denominator ray of g,
/// from the sequence (1, M, M^2, ...), M = first_m, first_m + 1, ...
IntVector generic_direction(const GenFun& g, long first_m = 1);
/// The first `count` distinct admissible directions of that sequence.
std::vector<IntVector> generic_directions(const GenFun& g, std::size_t count, long first_m = 1);

/// Sum of the constant terms of the Laurent expansions at z = 1 after the
/// substitution z_i = t^{mu_i}. Throws unless the result is an integer.
Int specialize_at_one(const GenFun& g, const IntVector& mu);
Int specialize_at_one(const GenFun& g);

/// Constant term of one term's expansion (rational in general).
Rat specialize_term(const GenFunTerm& term, const IntVector& mu);

struct CountResult {
  Int count;
  std::size_t num_vertices = 0;
  std::size_t num_cones = 0;
  std::size_t max_depth = 0;
};

/// |P cap Z^d| through Brion's theorem, half-open triangulation, signed
/// decomposition down to index <= max_index, and specialization.
CountResult count_polytope_detailed(const HPolytope& P, const Int& max_index = 1, long first_m = 1);
Int count_polytope(const HPolytope& P, const Int& max_index = 1);

/// Generating function of P as the sum over decomposed vertex cones.
GenFun polytope_genfun(const HPolytope& P, const Int& max_index = 1, CountResult* stats = nullptr);

}  // namespace latcount
