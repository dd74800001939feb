#include "latcount/lp.hpp"

#include <algorithm>

namespace latcount::lp {

namespace {

struct Tableau {
  std::vector<RatVector> a;  // m rows of n columns
  RatVector rhs;
  std::vector<std::size_t> basis;
  std::size_t n = 0;
};

struct Objective {
  RatVector reduced;  // objective = value + sum_j reduced[j] * x_j over nonbasic j
  Rat value;
};

void pivot(Tableau& t, Objective* objs[], std::size_t nobj, std::size_t r, std::size_t c) {
  Rat p = t.a[r][c];
  for (auto& x : t.a[r]) x /= p;
  t.rhs[r] /= p;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    if (i == r || t.a[i][c] == 0) continue;
    Rat f = t.a[i][c];
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.a[r][j] != 0) t.a[i][j] -= f * t.a[r][j];
    t.rhs[i] -= f * t.rhs[r];
  }
  for (std::size_t k = 0; k < nobj; ++k) {
    Objective& o = *objs[k];
    if (o.reduced[c] == 0) continue;
    Rat f = o.reduced[c];
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.a[r][j] != 0) o.reduced[j] -= f * t.a[r][j];
    o.value += f * t.rhs[r];
  }
  t.basis[r] = c;
}

Objective make_objective(const Tableau& t, const RatVector& cost) {
  Objective o{cost, Rat(0)};
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    const Rat& cb = cost[t.basis[i]];
    if (cb == 0) continue;
    o.value += cb * t.rhs[i];
    for (std::size_t j = 0; j < t.n; ++j) o.reduced[j] -= cb * t.a[i][j];
  }
  return o;
}

// Bland's rule. Columns with allowed[j] == false never enter.
Status run(Tableau& t, Objective& obj, Objective* other, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t enter = t.n;
    for (std::size_t j = 0; j < t.n; ++j)
      if (allowed[j] && obj.reduced[j] > 0) {
        enter = j;
        break;
      }
    if (enter == t.n) return Status::optimal;
    std::size_t leave = t.a.size();
    Rat best;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i][enter] <= 0) continue;
      Rat ratio = t.rhs[i] / t.a[i][enter];
      if (leave == t.a.size() || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.a.size()) return Status::unbounded;
    Objective* objs[2] = {&obj, other};
    pivot(t, objs, other ? 2 : 1, leave, enter);
  }
}

}  // namespace

Result maximize(const RatMatrix& A, const RatVector& b, const RatVector& c) {
  const std::size_t m = A.rows();
  const std::size_t d = A.cols();
  if (b.size() != m || c.size() != d) throw Error("lp::maximize: dimension mismatch");

  // Columns: u (d), v (d), slack (m), artificial (one per row with b < 0).
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_row.push_back(i);
  Tableau t;
  t.n = 2 * d + m + art_row.size();
  t.a.assign(m, RatVector(t.n, Rat(0)));
  t.rhs.resize(m);
  t.basis.resize(m);
  std::size_t next_art = 2 * d + m;
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < d; ++j) {
      t.a[i][j] = s * A(i, j);
      t.a[i][d + j] = -s * A(i, j);
    }
    t.a[i][2 * d + i] = s;
    t.rhs[i] = s * b[i];
    if (s < 0) {
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = 2 * d + i;
    }
  }

  RatVector cost2(t.n, Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    cost2[j] = c[j];
    cost2[d + j] = -c[j];
  }
  const std::size_t first_art = 2 * d + m;

  if (!art_row.empty()) {
    RatVector cost1(t.n, Rat(0));
    for (std::size_t j = first_art; j < t.n; ++j) cost1[j] = -1;
    Objective phase1 = make_objective(t, cost1);
    std::vector<bool> all(t.n, true);
    run(t, phase1, nullptr, all);
    if (phase1.value < 0) return {Status::infeasible, Rat(0), {}};
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t col = first_art;
      for (std::size_t j = 0; j < first_art; ++j)
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      if (col == first_art) {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(t, nullptr, 0, i, col);
      ++i;
    }
  }

  std::vector<bool> allowed(t.n, true);
  for (std::size_t j = first_art; j < t.n; ++j) allowed[j] = false;
  Objective phase2 = make_objective(t, cost2);
  Status st = run(t, phase2, nullptr, allowed);
  if (st == Status::unbounded) return {Status::unbounded, Rat(0), {}};

  RatVector x(d, Rat(0));
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    std::size_t j = t.basis[i];
    if (j < d) x[j] += t.rhs[i];
    else if (j < 2 * d) x[j - d] -= t.rhs[i];
  }
  return {Status::optimal, phase2.value, std::move(x)};
}

bool feasible(const RatMatrix& A, const RatVector& b) {
  return maximize(A, b, RatVector(A.cols(), Rat(0))).status != Status::infeasible;
}

std::optional<RatVector> interior_point(const RatMatrix& A, const RatVector& b) {
  const std::size_t d = A.cols();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j)
      if (A(i, j) != 0) zero = false;
    if (zero) {
      if (b[i] <= 0) return std::nullopt;
      continue;
    }
    rows.push_back(i);
  }
  // maximize t  s.t.  A x + t <= b,  t <= 1
  RatMatrix M(rows.size() + 1, d + 1, Rat(0));
  RatVector rhs(rows.size() + 1);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) M(k, j) = A(rows[k], j);
    M(k, d) = 1;
    rhs[k] = b[rows[k]];
  }
  M(rows.size(), d) = 1;
  rhs[rows.size()] = 1;
  RatVector obj(d + 1, Rat(0));
  obj[d] = 1;
  Result r = maximize(M, rhs, obj);
  if (r.status != Status::optimal || r.value <= 0) return std::nullopt;
  r.point.pop_back();
  return r.point;
}

}  // namespace latcount::lp
