#include "latcount/halfopen.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace latcount {

HalfOpenCone HalfOpenCone::closed(SimplicialCone base) {
  std::vector<int> sigma(base.dimension(), 1);
  return {std::move(base), std::move(sigma)};
}

bool HalfOpenCone::contains(const RatVector& x) const {
  RatVector lambda = base.coefficients(x);
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (sigma[j] > 0 ? lambda[j] < 0 : lambda[j] <= 0) return false;
  }
  return true;
}

bool HalfOpenPolyhedron::contains(const RatVector& x) const {
  for (const auto& r : rows) {
    Rat s = dot(r.normal, x);
    if (r.strict ? s >= r.rhs : s > r.rhs) return false;
  }
  return true;
}

bool HalfOpenPolyhedron::contains_closure(const RatVector& x) const {
  for (const auto& r : rows)
    if (dot(r.normal, x) > r.rhs) return false;
  return true;
}

std::pair<RatMatrix, RatVector> HalfOpenPolyhedron::closure_system(std::size_t dim) const {
  RatMatrix A(rows.size(), dim);
  RatVector b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) A(i, j) = rows[i].normal[j];
    b[i] = rows[i].rhs;
  }
  return {std::move(A), std::move(b)};
}

void HalfOpenPolyhedron::add_row(IntVector normal, Rat rhs, bool strict) {
  rows.push_back({std::move(normal), std::move(rhs), strict});
}

long SignedConeSum::evaluate(const RatVector& x) const {
  long total = 0;
  for (const auto& t : terms)
    if (t.cone.contains(x)) total += t.sign;
  return total;
}

void SignedConeSum::canonicalize() {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.cone.base.apex, a.cone.base.rays, a.cone.sigma, a.sign) <
           std::tie(b.cone.base.apex, b.cone.base.rays, b.cone.sigma, b.sign);
  });
}

// ---------------------------------------------------------------------------

WeightedPieces exactify(const WeightedPieces& pieces, const RatVector& y) {
  WeightedPieces out = pieces;
  for (auto& [weight, poly] : out)
    for (auto& row : poly.rows) {
      Rat p = dot(row.normal, y);
      if (p == 0) throw SemanticError("y not generic");
      row.strict = p > 0;
    }
  return out;
}

WeightedPieces exactify_toward(const WeightedPieces& pieces, const RatVector& point) {
  WeightedPieces out = pieces;
  for (auto& [weight, poly] : out)
    for (auto& row : poly.rows) {
      Rat p = dot(row.normal, point) - row.rhs;
      if (p == 0) throw SemanticError("y not generic");
      row.strict = p > 0;
    }
  return out;
}

RatVector choose_triangulation_y(const std::vector<IntVector>& rays,
                                 const std::vector<RatVector>& normals) {
  if (rays.empty()) throw Error("choose_triangulation_y: no rays");
  const std::size_t d = rays.front().size();
  Rat gamma = 1;
  // Each normal rules out finitely many gamma, so this terminates.
  for (int attempt = 0; attempt < 4096; ++attempt, gamma /= 2) {
    RatVector y(d, Rat(0));
    Rat power = 1;
    for (const auto& b : rays) {
      power *= gamma;
      for (std::size_t k = 0; k < d; ++k) y[k] += (1 + power) * b[k];
    }
    bool generic = std::none_of(normals.begin(), normals.end(),
                                [&](const RatVector& n) { return dot(n, y) == 0; });
    if (generic) return y;
  }
  throw Error("choose_triangulation_y: no generic vector found");
}

std::vector<HalfOpenCone> halfopen_triangulate(const ClosedCone& C) {
  std::vector<SimplicialCone> pieces = triangulate(C);
  std::vector<RatVector> normals;
  for (const auto& p : pieces) normals.insert(normals.end(), p.dual_normals.begin(), p.dual_normals.end());
  RatVector y = choose_triangulation_y(C.rays, normals);
  std::vector<HalfOpenCone> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    std::vector<int> sigma(p.dimension());
    for (std::size_t j = 0; j < sigma.size(); ++j) sigma[j] = dot(p.dual_normals[j], y) < 0 ? 1 : -1;
    out.push_back({std::move(p), std::move(sigma)});
  }
  return out;
}

// ---------------------------------------------------------------------------

int facet_strictness(const std::vector<int>& sigma, const RatVector& alpha, std::size_t l,
                     std::size_t m) {
  const std::size_t d = sigma.size();
  if (alpha.size() != d || m < 1 || m > d || l > d || l == m)
    throw Error("facet_strictness: index out of range");
  const int sm = sign(alpha[m - 1]);
  if (sm == 0) throw SemanticError("degenerate child, discard");
  const int sig_m = sigma[m - 1];
  if (l == 0) return sm * sig_m;  // case 1
  const int sl = sign(alpha[l - 1]);
  const int sig_l = sigma[l - 1];
  if (sl == 0) return sig_l;  // case 2
  if (sl == sm) {
    if (sig_l == sig_m) return l < m ? sig_l : -sig_l;  // case 3a
    return sig_l;                                       // case 3b
  }
  if (sig_l == sig_m) return sig_l;   // case 4a
  return l < m ? sig_l : sig_m;       // case 4b
}

namespace {

// Candidate v in the integer lattice adj(B) Z^d; alpha = v / det(B).
struct Candidate {
  Int l1;    // sum_i |v_i|
  Int norm;  // max_i |v_i|
  IntVector w;
  IntVector v;
};

Int sup_norm(const IntVector& v) {
  Int best = 0;
  for (const auto& x : v)
    if (abs(x) > best) best = abs(x);
  return best;
}

// w = B v / det, with the sign canonicalized to the lexicographically
// smaller of w and -w so that ties are broken deterministically.
Candidate make_candidate(const IntMatrix& B, const Int& D, IntVector v) {
  const std::size_t d = v.size();
  IntVector w(d);
  for (std::size_t i = 0; i < d; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < d; ++j) s += B(i, j) * v[j];
    if (!mpz_divisible_p(s.get_mpz_t(), D.get_mpz_t())) throw Error("find_w: lattice vector is not integral");
    mpz_divexact(w[i].get_mpz_t(), s.get_mpz_t(), D.get_mpz_t());
  }
  IntVector neg(d);
  for (std::size_t i = 0; i < d; ++i) neg[i] = -w[i];
  if (neg < w) {
    w = std::move(neg);
    for (auto& x : v) x = -x;
  }
  Int l1 = 0;
  for (const auto& x : v) l1 += abs(x);
  Int norm = sup_norm(v);
  return {std::move(l1), std::move(norm), std::move(w), std::move(v)};
}

}  // namespace

ExtraRay find_w(const IntMatrix& B) {
  const std::size_t d = B.rows();
  if (!B.square()) throw Error("find_w: ray matrix must be square");
  const Int D = det(B);
  if (D == 0) throw SemanticError("singular matrix");
  if (abs(D) == 1) throw SemanticError("find_w: cone is unimodular");

  // alpha = B^{-1} w ranges over the lattice spanned by the columns of
  // B^{-1}; scaled by det(B) these are the integer columns of adj(B).
  RatMatrix Binv = inverse(to_rat(B));
  IntMatrix adjT(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) adjT(j, i) = Rat(Binv(i, j) * D).get_num();
  IntMatrix red = lll_reduce(adjT);

  std::vector<IntVector> cands;
  for (std::size_t i = 0; i < d; ++i) cands.push_back(red.row_vector(i));
  if (d <= 6) {
    // All {-1,0,1} combinations of the reduced basis.
    std::vector<int> c(d, -1);
    for (;;) {
      IntVector v(d, Int(0));
      for (std::size_t i = 0; i < d; ++i)
        if (c[i] != 0)
          for (std::size_t k = 0; k < d; ++k) v[k] += c[i] * red(i, k);
      if (!is_zero(v)) cands.push_back(std::move(v));
      std::size_t i = 0;
      while (i < d && c[i] == 1) c[i++] = -1;
      if (i == d) break;
      ++c[i];
    }
  }

  // Minkowski: some lattice vector has sup-norm at most |D|^{-1/d} in
  // alpha-scale, i.e. norm^d <= |D|^{d-1} here. Only such vectors are
  // admissible; if the reduced basis offers none, enumerate exactly.
  Int bound = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) bound *= abs(D);
  auto admissible = [&](const IntVector& v) {
    Int n = sup_norm(v), p = 1;
    for (std::size_t i = 0; i < d; ++i) p *= n;
    return p <= bound;
  };
  if (std::none_of(cands.begin(), cands.end(), admissible)) {
    Int shortest = sup_norm(cands.front());
    for (const auto& v : cands) shortest = std::min(shortest, sup_norm(v));
    Rat radius_sq = Rat(shortest * shortest) * static_cast<long>(d);
    for (const auto& v : lattice_vectors_within(to_rat(red), radius_sq)) {
      IntVector iv(d);
      for (std::size_t k = 0; k < d; ++k) iv[k] = v[k].get_num();
      cands.push_back(std::move(iv));
    }
  }

  // Among admissible vectors minimize the sum of the child indices
  // (l1 norm of v), then the sup-norm, then w.
  std::optional<Candidate> best;
  for (auto& v : cands) {
    if (!admissible(v)) continue;
    Candidate c = make_candidate(B, D, std::move(v));
    if (!best || std::tie(c.l1, c.norm, c.w) < std::tie(best->l1, best->norm, best->w)) best = std::move(c);
  }
  if (!best) throw Error("find_w: no admissible lattice vector");

  IntVector w = primitive(best->w);
  RatVector alpha = solve(to_rat(B), to_rat(w));
  if (std::none_of(alpha.begin(), alpha.end(), [](const Rat& a) { return a > 0; })) {
    for (auto& x : w) x = -x;
    for (auto& x : alpha) x = -x;
  }
  return {std::move(w), std::move(alpha)};
}

namespace {

void decompose_rec(const HalfOpenCone& cone, int eps, const Int& index, const Int& max_index,
                   std::size_t depth, SignedConeSum& out, DecompositionStats* stats) {
  if (stats) {
    stats->nodes++;
    stats->max_depth = std::max(stats->max_depth, depth);
  }
  if (index <= max_index) {
    out.terms.push_back({eps, cone});
    return;
  }
  const std::size_t d = cone.dimension();
  ExtraRay extra = find_w(cone.base.ray_matrix());
  for (std::size_t m = 1; m <= d; ++m) {
    if (extra.alpha[m - 1] == 0) continue;  // lower-dimensional child
    std::vector<IntVector> rays = cone.base.rays;
    rays[m - 1] = extra.w;
    std::vector<int> sigma(d);
    for (std::size_t l = 1; l <= d; ++l)
      sigma[l - 1] = facet_strictness(cone.sigma, extra.alpha, l == m ? 0 : l, m);
    HalfOpenCone child{SimplicialCone::from_rays(cone.base.apex, std::move(rays)), std::move(sigma)};
    Int child_index = child.index();
    if (stats && child_index >= index) stats->strict_descent = false;
    decompose_rec(child, eps * sign(extra.alpha[m - 1]), child_index, max_index, depth + 1, out, stats);
  }
}

}  // namespace

SignedConeSum signed_decompose(const HalfOpenCone& cone, const Int& max_index, DecompositionStats* stats) {
  if (max_index < 1) throw Error("signed_decompose: max index must be at least 1");
  SignedConeSum out;
  decompose_rec(cone, 1, cone.index(), max_index, 0, out, stats);
  out.canonicalize();
  return out;
}

SignedConeSum decompose_cone(const ClosedCone& C, const Int& max_index, DecompositionStats* stats) {
  SignedConeSum out;
  for (const auto& piece : halfopen_triangulate(C)) {
    SignedConeSum part = signed_decompose(piece, max_index, stats);
    out.terms.insert(out.terms.end(), std::make_move_iterator(part.terms.begin()),
                     std::make_move_iterator(part.terms.end()));
  }
  out.canonicalize();
  return out;
}

}  // namespace latcount
