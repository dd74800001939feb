#include "latcount/genfun.hpp"

#include <algorithm>
#include <set>

namespace latcount {

ParallelepipedEnumerator::ParallelepipedEnumerator(const HalfOpenCone& cone)
    : rays_(cone.base.rays), duals_(cone.base.dual_normals), sigma_(cone.sigma) {
  const std::size_t d = rays_.size();
  SmithDecomposition snf = smith_normal_form(cone.base.ray_matrix());
  size_ = 1;
  for (const auto& s : snf.s) size_ *= s;

  // Residues W k, 0 <= k_j < s_j, in mixed-radix order over k.
  std::vector<Int> k(d, Int(0));
  for (;;) {
    IntVector r(d, Int(0));
    for (std::size_t j = 0; j < d; ++j)
      if (k[j] != 0)
        for (std::size_t i = 0; i < d; ++i) r[i] += snf.W(i, j) * k[j];
    residues_.push_back(std::move(r));
    std::size_t j = 0;
    while (j < d && k[j] + 1 == snf.s[j]) k[j++] = 0;
    if (j == d) break;
    ++k[j];
  }
}

std::vector<IntVector> ParallelepipedEnumerator::points(const RatVector& apex) const {
  const std::size_t d = rays_.size();
  std::vector<IntVector> out;
  out.reserve(residues_.size());
  RatVector diff(d);
  for (const auto& r : residues_) {
    for (std::size_t i = 0; i < d; ++i) diff[i] = apex[i] - r[i];
    IntVector a = r;
    for (std::size_t j = 0; j < d; ++j) {
      Rat t = dot(duals_[j], diff);
      Int c = sigma_[j] > 0 ? floor_rat(t) : ceil_rat(t - 1);
      if (c == 0) continue;
      for (std::size_t i = 0; i < d; ++i) a[i] -= c * rays_[j][i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<IntVector> parallelepiped_points(const HalfOpenCone& cone, const RatVector& apex) {
  return ParallelepipedEnumerator(cone).points(apex);
}

GenFunTerm gf_term(const HalfOpenCone& cone, const RatVector& apex, int sign) {
  return {sign, parallelepiped_points(cone, apex), cone.base.rays};
}

// ---------------------------------------------------------------------------

namespace {

IntVector direction_for(long m, std::size_t d) {
  IntVector mu(d);
  if (d == 1) {
    mu[0] = m;
    return mu;
  }
  Int p = 1;
  for (std::size_t i = 0; i < d; ++i, p *= m) mu[i] = p;
  return mu;
}

bool admissible(const GenFun& g, const IntVector& mu) {
  for (const auto& t : g.terms)
    for (const auto& b : t.denominator)
      if (dot(mu, b) == 0) return false;
  return true;
}

std::size_t genfun_dimension(const GenFun& g) {
  for (const auto& t : g.terms) {
    if (!t.denominator.empty()) return t.denominator.front().size();
    if (!t.numerator.empty()) return t.numerator.front().size();
  }
  return 0;
}

// Truncated power series over Q, coefficients 0..n.
using Series = std::vector<Rat>;

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series c(n + 1, Rat(0));
  for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series reciprocal(const Series& a, std::size_t n) {
  Series r(n + 1, Rat(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rat s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// Binomial coefficient C(N, k) for any integer N.
Int binomial(const Int& N, std::size_t k) {
  Int num = 1;
  Int den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= N - static_cast<unsigned long>(i);
    den *= static_cast<unsigned long>(i + 1);
  }
  return num / den;
}

}  // namespace

std::vector<IntVector> generic_directions(const GenFun& g, std::size_t count, long first_m) {
  const std::size_t d = std::max<std::size_t>(genfun_dimension(g), 1);
  std::vector<IntVector> out;
  for (long m = std::max(first_m, 1L); out.size() < count; ++m) {
    if (m > first_m + 1000000) throw Error("no generic direction found");
    IntVector mu = direction_for(m, d);
    if (admissible(g, mu) && std::find(out.begin(), out.end(), mu) == out.end()) out.push_back(std::move(mu));
  }
  return out;
}

IntVector generic_direction(const GenFun& g, long first_m) {
  return generic_directions(g, 1, first_m).front();
}

Rat specialize_term(const GenFunTerm& term, const IntVector& mu) {
  if (term.numerator.empty()) return 0;
  const std::size_t n = term.denominator.size();
  int s = term.sign;
  Int shift = 0;
  Series denom_inv(n + 1, Rat(0));
  denom_inv[0] = 1;
  for (const auto& b : term.denominator) {
    Int a = dot(mu, b);
    if (a == 0) throw Error("direction not generic for this term");
    if (a < 0) {
      s = -s;
      a = -a;
      shift += a;
    }
    // (1 - (1+u)^a) / (-u) = sum_{k=1}^a C(a,k) u^{k-1}
    Series p(n + 1, Rat(0));
    for (std::size_t k = 1; k <= n + 1; ++k) p[k - 1] = binomial(a, k);
    denom_inv = multiply(denom_inv, reciprocal(p, n), n);
  }
  Series num(n + 1, Rat(0));
  for (const auto& alpha : term.numerator) {
    Int N = dot(mu, alpha) + shift;
    for (std::size_t k = 0; k <= n; ++k) num[k] += binomial(N, k);
  }
  Series prod = multiply(num, denom_inv, n);
  Rat c = prod[n];
  if (n % 2 == 1) s = -s;
  return s * c;
}

Int specialize_at_one(const GenFun& g, const IntVector& mu) {
  Rat total = 0;
  for (const auto& t : g.terms) total += specialize_term(t, mu);
  if (total.get_den() != 1) throw Error("specialization produced a non-integer: " + total.get_str());
  return total.get_num();
}

Int specialize_at_one(const GenFun& g) {
  if (g.terms.empty()) return 0;
  return specialize_at_one(g, generic_direction(g));
}

// ---------------------------------------------------------------------------

GenFun polytope_genfun(const HPolytope& P, const Int& max_index, CountResult* stats) {
  GenFun g;
  std::vector<Vertex> vertices = enumerate_vertices(P);
  DecompositionStats ds;
  for (const auto& v : vertices) {
    SignedConeSum sum = decompose_cone(vertex_cone(P, v), max_index, &ds);
    for (const auto& t : sum.terms) g.terms.push_back(gf_term(t.cone, t.cone.base.apex, t.sign));
  }
  if (stats) {
    stats->num_vertices = vertices.size();
    stats->num_cones = g.terms.size();
    stats->max_depth = ds.max_depth;
  }
  return g;
}

CountResult count_polytope_detailed(const HPolytope& P, const Int& max_index, long first_m) {
  CountResult r;
  GenFun g = polytope_genfun(P, max_index, &r);
  r.count = g.terms.empty() ? Int(0) : specialize_at_one(g, generic_direction(g, first_m));
  return r;
}

Int count_polytope(const HPolytope& P, const Int& max_index) {
  return count_polytope_detailed(P, max_index).count;
}

}  // namespace latcount
