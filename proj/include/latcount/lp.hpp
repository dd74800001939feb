#pragma once

// Exact rational linear programming over {x : A x <= b}, x free.
// Dense two-phase simplex with Bland's rule; meant for the small systems
// that arise in vertex/chamber computations.

#include <optional>

#include "latcount/arith.hpp"

namespace latcount::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rat value;
  RatVector point;  // optimal point when status == optimal
};

/// maximize <c, x> subject to A x <= b.
Result maximize(const RatMatrix& A, const RatVector& b, const RatVector& c);

bool feasible(const RatMatrix& A, const RatVector& b);

/// A point satisfying every row strictly, if one exists. Rows with zero
/// normal are checked directly and then ignored.
std::optional<RatVector> interior_point(const RatMatrix& A, const RatVector& b);

inline bool full_dimensional(const RatMatrix& A, const RatVector& b) {
  return interior_point(A, b).has_value();
}

}  // namespace latcount::lp
