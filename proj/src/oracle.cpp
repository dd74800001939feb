#include "latcount/oracle.hpp"

#include <limits>

#include "latcount/lp.hpp"

namespace latcount {

Int Box::volume() const {
  Int v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    v *= upper[i] - lower[i] + 1;
  }
  return v;
}

Box bounding_box(const HPolytope& P) {
  const std::size_t d = P.dimension();
  check_bounded(P.A);
  RatMatrix A = to_rat(P.A);
  RatVector b = to_rat(P.b);
  Box box{IntVector(d, Int(0)), IntVector(d, Int(-1))};
  for (std::size_t i = 0; i < d; ++i) {
    RatVector c(d, Rat(0));
    c[i] = 1;
    lp::Result hi = lp::maximize(A, b, c);
    if (hi.status == lp::Status::infeasible) return {IntVector(d, Int(1)), IntVector(d, Int(0))};
    c[i] = -1;
    lp::Result lo = lp::maximize(A, b, c);
    box.upper[i] = floor_rat(hi.value);
    box.lower[i] = ceil_rat(-lo.value);
  }
  return box;
}

namespace {

bool fits_int64(const Int& x) { return x.fits_slong_p(); }

// int64 scan, used when every |a_ij| * max|x_j| summed fits comfortably.
Int scan_fast(const HPolytope& P, const Box& box) {
  const std::size_t d = P.dimension();
  const std::size_t m = P.num_constraints();
  std::vector<long> A(m * d), b(m), lo(d), hi(d), x(d);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < d; ++j) A[r * d + j] = P.A(r, j).get_si();
    b[r] = P.b[r].get_si();
  }
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = box.lower[j].get_si();
    hi[j] = box.upper[j].get_si();
    x[j] = lo[j];
  }
  std::uint64_t count = 0;
  for (;;) {
    bool in = true;
    for (std::size_t r = 0; r < m && in; ++r) {
      long s = 0;
      for (std::size_t j = 0; j < d; ++j) s += A[r * d + j] * x[j];
      in = s <= b[r];
    }
    if (in) ++count;
    // Advance the last coordinate fastest (lexicographic order).
    std::size_t j = d;
    while (j > 0 && x[j - 1] == hi[j - 1]) {
      x[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) break;
    ++x[j - 1];
  }
  return Int(static_cast<unsigned long>(count));
}

Int scan_exact(const HPolytope& P, const Box& box) {
  const std::size_t d = P.dimension();
  IntVector x = box.lower;
  Int count = 0;
  for (;;) {
    if (P.contains(x)) ++count;
    std::size_t j = d;
    while (j > 0 && x[j - 1] == box.upper[j - 1]) {
      x[j - 1] = box.lower[j - 1];
      --j;
    }
    if (j == 0) break;
    ++x[j - 1];
  }
  return count;
}

}  // namespace

Int brute_count(const HPolytope& P, std::uint64_t cap) {
  Box box = bounding_box(P);
  Int vol = box.volume();
  if (vol == 0) return 0;
  if (vol > Int(std::to_string(cap))) throw SemanticError("oracle too large");

  // Bound on |<a, x>| over the box, to decide whether int64 is safe.
  Int bound = 0;
  const std::size_t d = P.dimension();
  Int xmax = 0;
  for (std::size_t j = 0; j < d; ++j) xmax = std::max({xmax, Int(abs(box.lower[j])), Int(abs(box.upper[j]))});
  for (std::size_t r = 0; r < P.num_constraints(); ++r) {
    Int s = abs(P.b[r]);
    for (std::size_t j = 0; j < d; ++j) s += abs(P.A(r, j)) * xmax;
    bound = std::max(bound, s);
  }
  const Int limit = Int(std::numeric_limits<long>::max() / 4);
  if (bound < limit && fits_int64(xmax)) return scan_fast(P, box);
  return scan_exact(P, box);
}

}  // namespace latcount
