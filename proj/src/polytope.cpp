#include "latcount/polytope.hpp"

#include <algorithm>
#include <map>

#include "latcount/lp.hpp"

namespace latcount {

bool HPolytope::contains(const RatVector& x) const {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
    if (s > b[i]) return false;
  }
  return true;
}

bool HPolytope::contains(const IntVector& x) const {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
    if (s > b[i]) return false;
  }
  return true;
}

SimplicialCone SimplicialCone::from_rays(RatVector apex, std::vector<IntVector> rays) {
  const std::size_t d = apex.size();
  if (rays.size() != d) throw SemanticError("simplicial cone needs exactly d rays");
  for (auto& r : rays) {
    if (r.size() != d) throw Error("ray dimension mismatch");
    r = primitive(r);
  }
  SimplicialCone c{std::move(apex), std::move(rays), {}};
  RatMatrix inv = inverse(to_rat(c.ray_matrix()));
  c.dual_normals.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    c.dual_normals[j] = inv.row_vector(j);
    for (auto& x : c.dual_normals[j]) x = -x;
  }
  return c;
}

IntMatrix SimplicialCone::ray_matrix() const { return IntMatrix::from_columns(rays); }

Int SimplicialCone::index() const { return abs(det(ray_matrix())); }

RatVector SimplicialCone::coefficients(const RatVector& x) const {
  const std::size_t d = apex.size();
  RatVector diff(d);
  for (std::size_t i = 0; i < d; ++i) diff[i] = x[i] - apex[i];
  RatVector lambda(d);
  for (std::size_t j = 0; j < d; ++j) lambda[j] = -dot(dual_normals[j], diff);
  return lambda;
}

// ---------------------------------------------------------------------------
// Double description

namespace {

struct DdRay {
  IntVector v;
  std::vector<bool> zero;  // row i tight (only meaningful for processed rows)
};

std::vector<std::size_t> independent_rows(const IntMatrix& G) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> acc;
  for (std::size_t i = 0; i < G.rows() && chosen.size() < G.cols(); ++i) {
    acc.push_back(G.row_vector(i));
    if (rank(IntMatrix::from_rows(acc)) == acc.size()) {
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

}  // namespace

std::vector<IntVector> extreme_rays(const IntMatrix& G) {
  const std::size_t m = G.rows();
  const std::size_t n = G.cols();
  std::vector<std::size_t> init = independent_rows(G);
  if (init.size() < n) throw SemanticError("cone is not pointed");

  RatMatrix Ginit(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) Ginit(k, j) = G(init[k], j);
  RatMatrix inv = inverse(Ginit);

  std::vector<bool> processed(m, false);
  for (auto i : init) processed[i] = true;
  std::vector<DdRay> rays;
  for (std::size_t k = 0; k < n; ++k) {
    RatVector col = inv.column_vector(k);
    for (auto& x : col) x = -x;
    DdRay r{primitive(col), std::vector<bool>(m, false)};
    for (std::size_t j = 0; j < n; ++j) r.zero[init[j]] = (j != k);
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    const IntVector gi = G.row_vector(i);
    std::vector<Int> s(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(gi, rays[k].v);
      (s[k] > 0 ? plus : s[k] < 0 ? minus : zero).push_back(k);
    }
    std::vector<DdRay> next;
    for (auto p : plus)
      for (auto q : minus) {
        std::vector<bool> common(m, false);
        std::size_t count = 0;
        for (std::size_t r = 0; r < m; ++r)
          if (processed[r] && rays[p].zero[r] && rays[q].zero[r]) {
            common[r] = true;
            ++count;
          }
        if (count + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          bool covers = true;
          for (std::size_t r = 0; r < m && covers; ++r)
            if (common[r] && !rays[k].zero[r]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
        common[i] = true;
        next.push_back({primitive(v), std::move(common)});
      }
    for (auto k : zero) {
      rays[k].zero[i] = true;
      next.push_back(std::move(rays[k]));
    }
    for (auto k : minus) next.push_back(std::move(rays[k]));
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

void check_bounded(const IntMatrix& A) {
  const std::size_t d = A.cols();
  RatMatrix M = to_rat(A);
  RatVector zero(A.rows(), Rat(0));
  for (std::size_t j = 0; j < d; ++j)
    for (int s : {1, -1}) {
      RatVector c(d, Rat(0));
      c[j] = s;
      if (lp::maximize(M, zero, c).status == lp::Status::unbounded)
        throw SemanticError("polyhedron unbounded");
    }
}

std::vector<Vertex> enumerate_vertices(const HPolytope& P) {
  const std::size_t d = P.dimension();
  const std::size_t m = P.num_constraints();
  if (d == 0) throw SemanticError("dimension must be positive");
  if (P.b.size() != m) throw Error("enumerate_vertices: rhs size mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j)
      if (P.A(i, j) != 0) zero = false;
    if (zero && P.b[i] < 0) return {};
  }
  RatMatrix A = to_rat(P.A);
  RatVector b = to_rat(P.b);
  if (!lp::feasible(A, b)) return {};
  check_bounded(P.A);
  if (!lp::full_dimensional(A, b)) throw SemanticError("polytope is not full-dimensional");

  // Homogenize: vertices of P are the extreme rays (x, t), t > 0, of
  // {A x - b t <= 0, -t <= 0}.
  IntMatrix G(m + 1, d + 1, Int(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) G(i, j) = P.A(i, j);
    G(i, d) = -P.b[i];
  }
  G(m, d) = -1;

  std::vector<Vertex> out;
  for (const auto& r : extreme_rays(G)) {
    if (r[d] <= 0) throw Error("enumerate_vertices: unexpected recession ray");
    Vertex v;
    v.point.resize(d);
    for (std::size_t j = 0; j < d; ++j) v.point[j] = make_rat(r[j], r[d]);
    for (std::size_t i = 0; i < m; ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < d; ++j) s += P.A(i, j) * v.point[j];
      if (s == P.b[i]) v.tight_rows.push_back(i);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  return out;
}

ClosedCone cone_from_normals(RatVector apex, const std::vector<IntVector>& normals) {
  std::vector<IntVector> prim;
  for (const auto& n : normals)
    if (!is_zero(n)) prim.push_back(primitive(n));
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  if (prim.empty()) throw SemanticError("cone is not pointed");
  IntMatrix G = IntMatrix::from_rows(prim);
  return {std::move(apex), extreme_rays(G), std::move(prim)};
}

ClosedCone vertex_cone(const HPolytope& P, const Vertex& v) {
  std::vector<IntVector> normals;
  for (auto i : v.tight_rows) normals.push_back(P.A.row_vector(i));
  return cone_from_normals(v.point, normals);
}

bool cone_contains(const ClosedCone& C, const RatVector& x) {
  RatVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - C.apex[i];
  for (const auto& n : C.facet_normals)
    if (dot(n, diff) > 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Placing triangulation

namespace {

void check_pointed_full(const ClosedCone& C) {
  const std::size_t d = C.dimension();
  if (C.rays.empty() || rank(IntMatrix::from_rows(C.rays)) != d)
    throw SemanticError("cone is not full-dimensional");
  // Pointed iff no convex combination of the rays is zero:
  // lambda >= 0, sum lambda = 1, sum lambda_i r_i = 0 infeasible.
  const std::size_t n = C.rays.size();
  RatMatrix M(n + 2 + 2 * d, n, Rat(0));
  RatVector rhs(M.rows(), Rat(0));
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) M(row++, i) = -1;
  for (std::size_t i = 0; i < n; ++i) {
    M(row, i) = 1;
    M(row + 1, i) = -1;
  }
  rhs[row] = 1;
  rhs[row + 1] = -1;
  row += 2;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      M(row, i) = C.rays[i][k];
      M(row + 1, i) = -C.rays[i][k];
    }
    row += 2;
  }
  if (lp::feasible(M, rhs)) throw SemanticError("cone is not pointed");
}

}  // namespace

std::vector<SimplicialCone> triangulate(const ClosedCone& C) {
  const std::size_t d = C.dimension();
  check_pointed_full(C);
  const std::size_t n = C.rays.size();
  if (n == d) return {SimplicialCone::from_rays(C.apex, C.rays)};

  std::vector<std::size_t> first = independent_rows(IntMatrix::from_rows(C.rays));
  std::vector<std::vector<std::size_t>> simplices{first};
  std::vector<bool> placed(n, false);
  for (auto i : first) placed[i] = true;

  for (std::size_t r = 0; r < n; ++r) {
    if (placed[r]) continue;
    placed[r] = true;
    // Boundary facets: facets that belong to exactly one simplex.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;  // -> (count, opposite ray)
    for (const auto& s : simplices)
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::size_t> f;
        for (std::size_t t = 0; t < d; ++t)
          if (t != k) f.push_back(s[t]);
        auto& e = facets[f];
        e.first++;
        e.second = s[k];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, info] : facets) {
      if (info.first != 1) continue;
      IntMatrix rows(d - 1, d);
      for (std::size_t t = 0; t + 1 < d; ++t)
        for (std::size_t j = 0; j < d; ++j) rows(t, j) = C.rays[f[t]][j];
      IntVector normal = d == 1 ? IntVector{Int(1)} : hyperplane_normal(rows);
      if (dot(normal, C.rays[info.second]) > 0)
        for (auto& x : normal) x = -x;
      if (dot(normal, C.rays[r]) > 0) {
        std::vector<std::size_t> s = f;
        s.push_back(r);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }

  std::vector<SimplicialCone> out;
  out.reserve(simplices.size());
  for (const auto& s : simplices) {
    std::vector<IntVector> rays;
    for (auto i : s) rays.push_back(C.rays[i]);
    out.push_back(SimplicialCone::from_rays(C.apex, std::move(rays)));
  }
  return out;
}

}  // namespace latcount
