#include "latcount/parametric.hpp"

#include <algorithm>
#include <map>

#include "latcount/lp.hpp"

namespace latcount {

using Row = HalfOpenPolyhedron::Row;

namespace {

// Integer primitive normal for <normal, q> <= rhs; nullopt for a zero normal.
std::optional<Row> make_row(const RatVector& normal, const Rat& rhs) {
  if (is_zero(normal)) return std::nullopt;
  Int den = 1;
  for (const auto& x : normal) den = lcm(den, Int(x.get_den()));
  IntVector n(normal.size());
  Int g = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    n[i] = Rat(normal[i] * den).get_num();
    g = gcd(g, n[i]);
  }
  for (auto& x : n) x /= g;
  return Row{std::move(n), Rat(rhs * den / g), false};
}

Row opposite(const Row& r) {
  IntVector n(r.normal.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = -r.normal[i];
  return {std::move(n), -r.rhs, false};
}

std::optional<RatVector> interior(const HalfOpenPolyhedron& P, std::size_t p) {
  auto [A, b] = P.closure_system(p);
  return lp::interior_point(A, b);
}

bool full_dim(const HalfOpenPolyhedron& P, std::size_t p) { return interior(P, p).has_value(); }

bool nonempty(const HalfOpenPolyhedron& P, std::size_t p) {
  auto [A, b] = P.closure_system(p);
  return lp::feasible(A, b);
}

// Is <r.normal, q> <= r.rhs valid on the (nonempty) closure of P?
bool implied(const HalfOpenPolyhedron& P, std::size_t p, const Row& r) {
  auto [A, b] = P.closure_system(p);
  lp::Result res = lp::maximize(A, b, to_rat(r.normal));
  return res.status == lp::Status::optimal && res.value <= r.rhs;
}

HalfOpenPolyhedron intersect(HalfOpenPolyhedron P, const std::vector<Row>& rows) {
  P.rows.insert(P.rows.end(), rows.begin(), rows.end());
  return P;
}

// Drops duplicate and redundant rows of a full-dimensional closed region and
// sorts the rest.
HalfOpenPolyhedron simplify(const HalfOpenPolyhedron& P, std::size_t p) {
  std::map<IntVector, Rat> tightest;
  for (const auto& r : P.rows) {
    auto it = tightest.find(r.normal);
    if (it == tightest.end()) tightest.emplace(r.normal, r.rhs);
    else if (r.rhs < it->second) it->second = r.rhs;
  }
  std::vector<Row> rows;
  for (const auto& [n, b] : tightest) rows.push_back({n, b, false});
  for (std::size_t i = 0; i < rows.size();) {
    HalfOpenPolyhedron rest;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i) rest.rows.push_back(rows[k]);
    if (implied(rest, p, rows[i])) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  return {std::move(rows)};
}

template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

bool ParametricPolytope::in_parameter_space(const RatVector& q) const {
  return q.size() == num_params() && Q.contains_closure(q);
}

RatVector ParametricPolytope::rhs(const RatVector& q) const {
  if (q.size() != num_params()) throw SemanticError("parameter vector has wrong length");
  RatVector r(num_constraints());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f[i];
    for (std::size_t k = 0; k < q.size(); ++k) r[i] += E(i, k) * q[k];
  }
  return r;
}

HPolytope ParametricPolytope::instantiate(const RatVector& q) const {
  RatVector r = rhs(q);
  HPolytope P{A, IntVector(r.size())};
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int den = r[i].get_den();
    for (std::size_t j = 0; j < dimension(); ++j) P.A(i, j) *= den;
    P.b[i] = r[i].get_num();
  }
  return P;
}

void validate(const ParametricPolytope& pp) {
  const std::size_t m = pp.A.rows();
  if (pp.A.cols() == 0) throw SemanticError("dimension must be positive");
  if (pp.E.cols() == 0) throw SemanticError("number of parameters must be positive");
  if (pp.E.rows() != m || pp.f.size() != m) throw SemanticError("parametric data has inconsistent row counts");
  for (const auto& r : pp.Q.rows)
    if (r.normal.size() != pp.E.cols()) throw SemanticError("parameter-space row has wrong length");
}

RatVector ParametricVertex::at(const RatVector& q) const {
  RatVector v = M * q;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[i];
  return v;
}

std::vector<ParametricVertex> enumerate_parametric_vertices(const ParametricPolytope& pp) {
  validate(pp);
  const std::size_t d = pp.dimension();
  const std::size_t m = pp.num_constraints();
  const std::size_t p = pp.num_params();
  if (rank(pp.A) != d) throw SemanticError("constraint matrix is rank-deficient");
  check_bounded(pp.A);

  const RatMatrix A = to_rat(pp.A);
  std::vector<ParametricVertex> out;
  std::map<std::pair<std::vector<Rat>, RatVector>, bool> seen;

  for_each_subset(m, d, [&](const std::vector<std::size_t>& basis) {
    RatMatrix AB(d, d), EB(d, p);
    RatVector fB(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) AB(i, j) = A(basis[i], j);
      for (std::size_t k = 0; k < p; ++k) EB(i, k) = pp.E(basis[i], k);
      fB[i] = pp.f[basis[i]];
    }
    if (rank(AB) != d) return;
    RatMatrix Minv = inverse(AB);
    ParametricVertex v;
    v.basis = basis;
    v.M = Minv * EB;
    v.c = Minv * fB;

    HalfOpenPolyhedron act;
    for (std::size_t r = 0; r < m; ++r) {
      // (A_r M - E_r) q <= f_r - A_r c
      RatVector n(p, Rat(0));
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t j = 0; j < d; ++j) n[k] += A(r, j) * v.M(j, k);
        n[k] -= pp.E(r, k);
      }
      Rat rhs = pp.f[r];
      for (std::size_t j = 0; j < d; ++j) rhs -= A(r, j) * v.c[j];
      std::optional<Row> row = make_row(n, rhs);
      if (!row) {
        if (rhs < 0) return;  // never feasible
        if (rhs == 0) v.tight_rows.push_back(r);
        continue;
      }
      act.rows.push_back(std::move(*row));
    }
    act.rows.insert(act.rows.end(), pp.Q.rows.begin(), pp.Q.rows.end());
    if (!nonempty(act, p)) return;

    std::vector<Rat> key(v.M.rows() * v.M.cols());
    for (std::size_t i = 0; i < v.M.rows(); ++i)
      for (std::size_t k = 0; k < v.M.cols(); ++k) key[i * v.M.cols() + k] = v.M(i, k);
    if (!seen.emplace(std::make_pair(std::move(key), v.c), true).second) return;

    v.activity_full_dimensional = full_dim(act, p);
    v.activity = v.activity_full_dimensional ? simplify(act, p) : std::move(act);

    std::vector<IntVector> normals;
    for (auto r : v.tight_rows) normals.push_back(pp.A.row_vector(r));
    RatMatrix G = to_rat(IntMatrix::from_rows(normals));
    v.cone_full_dimensional = lp::full_dimensional(G, RatVector(normals.size(), Rat(0)));
    if (v.cone_full_dimensional) {
      v.cone = cone_from_normals(RatVector(d, Rat(0)), normals);
    } else {
      v.cone.apex = RatVector(d, Rat(0));
      for (const auto& n : normals) v.cone.facet_normals.push_back(primitive(n));
    }
    out.push_back(std::move(v));
  });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Chamber> chambers_max_dim(const std::vector<ParametricVertex>& vertices,
                                      const HalfOpenPolyhedron& Q, std::size_t p) {
  if (!full_dim(Q, p)) return {};

  // Common refinement of Q by every full-dimensional activity region.
  std::vector<Chamber> cells{{simplify(Q, p), {}}};
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (!vertices[j].activity_full_dimensional) continue;
    std::vector<Chamber> next;
    for (auto& cell : cells) {
      std::vector<Row> cut;
      for (const auto& r : vertices[j].activity.rows)
        if (!implied(cell.region, p, r)) cut.push_back(r);
      if (cut.empty()) {
        cell.vertices.push_back(j);
        next.push_back(std::move(cell));
        continue;
      }
      HalfOpenPolyhedron inside = intersect(cell.region, cut);
      if (!full_dim(inside, p)) {
        next.push_back(std::move(cell));
        continue;
      }
      std::vector<std::size_t> sig = cell.vertices;
      sig.push_back(j);
      next.push_back({simplify(inside, p), std::move(sig)});
      // cell \ A_j as pieces {r_1..r_{k-1} hold, r_k violated}.
      HalfOpenPolyhedron prefix = cell.region;
      for (const auto& r : cut) {
        HalfOpenPolyhedron piece = intersect(prefix, {opposite(r)});
        if (full_dim(piece, p)) next.push_back({simplify(piece, p), cell.vertices});
        prefix.rows.push_back(r);
      }
    }
    cells = std::move(next);
  }

  // Merge cells of equal signature when the region cut out by their common
  // valid rows meets no other cell in a full-dimensional set.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!cells[i].vertices.empty()) groups[cells[i].vertices].push_back(i);

  std::vector<Chamber> chambers;
  for (const auto& [sig, members] : groups) {
    if (members.size() == 1) {
      chambers.push_back(cells[members.front()]);
      continue;
    }
    HalfOpenPolyhedron hull;
    for (auto i : members)
      for (const auto& r : cells[i].region.rows) {
        bool valid = std::all_of(members.begin(), members.end(),
                                 [&](std::size_t k) { return implied(cells[k].region, p, r); });
        if (valid) hull.rows.push_back(r);
      }
    bool disjoint = full_dim(hull, p);
    for (std::size_t k = 0; k < cells.size() && disjoint; ++k) {
      if (std::find(members.begin(), members.end(), k) != members.end()) continue;
      if (full_dim(intersect(hull, cells[k].region.rows), p)) disjoint = false;
    }
    if (disjoint) {
      chambers.push_back({simplify(hull, p), sig});
    } else {
      for (auto i : members) chambers.push_back(cells[i]);
    }
  }
  return chambers;
}

RatVector choose_parameter_point(const std::vector<const HalfOpenPolyhedron*>& regions, std::size_t p) {
  if (regions.empty()) throw Error("choose_parameter_point: no regions");
  std::optional<RatVector> base = interior(*regions.front(), p);
  if (!base) throw Error("choose_parameter_point: first region is not full-dimensional");
  Rat gamma = 1;
  for (int attempt = 0; attempt < 4096; ++attempt, gamma /= 2) {
    RatVector y = *base;
    Rat power = gamma;
    for (std::size_t i = 0; i < p; ++i) {
      power *= gamma;
      y[i] += power;
    }
    bool ok = std::all_of(regions.front()->rows.begin(), regions.front()->rows.end(),
                          [&](const Row& r) { return dot(r.normal, y) < r.rhs; });
    for (const auto* R : regions) {
      if (!ok) break;
      for (const auto& r : R->rows)
        if (dot(r.normal, y) == r.rhs) {
          ok = false;
          break;
        }
    }
    if (ok) return y;
  }
  throw Error("choose_parameter_point: no generic point found");
}

std::vector<Chamber> halfopen_chambers(const std::vector<Chamber>& chambers, const RatVector& y_q) {
  WeightedPieces pieces;
  for (const auto& c : chambers) pieces.emplace_back(Rat(1), c.region);
  pieces = exactify_toward(pieces, y_q);
  std::vector<Chamber> out;
  for (std::size_t i = 0; i < chambers.size(); ++i) out.push_back({pieces[i].second, chambers[i].vertices});
  return out;
}

std::vector<std::pair<std::size_t, HalfOpenPolyhedron>> halfopen_activity_regions(
    const std::vector<ParametricVertex>& vertices, const RatVector& y_q) {
  std::vector<std::size_t> idx;
  WeightedPieces pieces;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (!vertices[j].activity_full_dimensional) continue;
    idx.push_back(j);
    pieces.emplace_back(Rat(1), vertices[j].activity);
  }
  pieces = exactify_toward(pieces, y_q);
  std::vector<std::pair<std::size_t, HalfOpenPolyhedron>> out;
  for (std::size_t i = 0; i < idx.size(); ++i) out.emplace_back(idx[i], std::move(pieces[i].second));
  return out;
}

// ---------------------------------------------------------------------------

ParametricCounter::ParametricCounter(ParametricPolytope pp, const Int& max_index, long first_m)
    : pp_(std::move(pp)) {
  validate(pp_);
  const std::size_t p = pp_.num_params();
  vertices_ = enumerate_parametric_vertices(pp_);
  chambers_ = chambers_max_dim(vertices_, pp_.Q, p);
  data_.resize(vertices_.size());
  if (chambers_.empty()) return;

  std::vector<const HalfOpenPolyhedron*> regions;
  for (const auto& c : chambers_) regions.push_back(&c.region);
  for (const auto& v : vertices_)
    if (v.activity_full_dimensional) regions.push_back(&v.activity);
  y_q_ = choose_parameter_point(regions, p);
  halfopen_ = halfopen_chambers(chambers_, y_q_);
  activity_ = halfopen_activity_regions(vertices_, y_q_);

  GenFun rays;
  DecompositionStats stats;
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    const ParametricVertex& v = vertices_[j];
    if (!v.activity_full_dimensional || !v.cone_full_dimensional) continue;
    VertexData vd{decompose_cone(v.cone, max_index, &stats), {}};
    for (const auto& t : vd.cones.terms) {
      vd.enumerators.emplace_back(t.cone);
      rays.terms.push_back({t.sign, {}, t.cone.base.rays});
    }
    data_[j] = std::move(vd);
  }
  max_depth_ = stats.max_depth;
  mu_ = rays.terms.empty() ? IntVector(pp_.dimension(), Int(1)) : generic_direction(rays, first_m);
}

const SignedConeSum* ParametricCounter::decomposition(std::size_t vertex) const {
  if (vertex >= data_.size() || !data_[vertex]) return nullptr;
  return &data_[vertex]->cones;
}

std::size_t ParametricCounter::num_cones() const {
  std::size_t n = 0;
  for (const auto& d : data_)
    if (d) n += d->cones.terms.size();
  return n;
}

Rat ParametricCounter::vertex_sum(std::size_t vertex, const RatVector& q) const {
  const VertexData& vd = *data_[vertex];
  RatVector apex = vertices_[vertex].at(q);
  Rat total = 0;
  for (std::size_t k = 0; k < vd.cones.terms.size(); ++k) {
    const auto& t = vd.cones.terms[k];
    GenFunTerm term{t.sign, vd.enumerators[k].points(apex), t.cone.base.rays};
    total += specialize_term(term, mu_);
  }
  return total;
}

Evaluation ParametricCounter::sum_over(const std::vector<std::size_t>& vertices, const RatVector& q) const {
  Rat total = 0;
  for (auto j : vertices) {
    if (!data_[j]) return {Int(0), "P_q is not full-dimensional on this chamber"};
    total += vertex_sum(j, q);
  }
  if (total.get_den() != 1) throw Error("specialization produced a non-integer: " + total.get_str());
  return {total.get_num(), ""};
}

std::optional<std::string> ParametricCounter::outside(const RatVector& q) const {
  if (q.size() != pp_.num_params()) throw SemanticError("parameter vector has wrong length");
  if (!pp_.in_parameter_space(q)) return "q outside the parameter space";
  return std::nullopt;
}

Evaluation ParametricCounter::evaluate(const RatVector& q) const {
  if (auto why = outside(q)) return {Int(0), *why};
  for (const auto& c : halfopen_)
    if (c.region.contains(q)) return sum_over(c.vertices, q);
  return {Int(0), "q in no chamber"};
}

Evaluation ParametricCounter::evaluate_by_activity(const RatVector& q) const {
  if (auto why = outside(q)) return {Int(0), *why};
  std::vector<std::size_t> active;
  for (const auto& [j, region] : activity_)
    if (region.contains(q)) active.push_back(j);
  if (active.empty()) return {Int(0), "q in no chamber"};
  return sum_over(active, q);
}

Evaluation ParametricCounter::evaluate_in_chamber(std::size_t chamber, const RatVector& q) const {
  if (chamber >= chambers_.size()) throw Error("chamber index out of range");
  if (auto why = outside(q)) return {Int(0), *why};
  if (!chambers_[chamber].region.contains_closure(q)) return {Int(0), "q outside the chamber closure"};
  return sum_over(chambers_[chamber].vertices, q);
}

Evaluation evaluate_count(const ParametricPolytope& pp, const RatVector& q0, const Int& max_index) {
  return ParametricCounter(pp, max_index).evaluate(q0);
}

}  // namespace latcount
