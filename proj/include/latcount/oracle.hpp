#pragma once

// Brute-force ground truth for tests and --verify.

#include <cstdint>

#include "latcount/halfopen.hpp"

namespace latcount {

struct Box {
  IntVector lower;
  IntVector upper;

  /// Number of integer points; 0 if some lower > upper.
  Int volume() const;
};

/// Integer points of the LP bounding box of P. Empty P gives a box with
/// lower > upper.
Box bounding_box(const HPolytope& P);

inline constexpr std::uint64_t kDefaultOracleCap = 100000000;

/// |P cap Z^d| by exhaustive lexicographic scan of the bounding box.
/// Throws SemanticError("oracle too large") if the box has more than `cap`
/// points.
Int brute_count(const HPolytope& P, std::uint64_t cap = kDefaultOracleCap);

inline bool member(const HalfOpenPolyhedron& region, const RatVector& x) { return region.contains(x); }
inline bool member(const HalfOpenCone& cone, const RatVector& x) { return cone.contains(x); }

}  // namespace latcount
