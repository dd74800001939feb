#include "latcount/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latcount {

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

int sign(const Int& x) { return sgn(x); }
int sign(const Rat& x) { return sgn(x); }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error("primitive: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, Int(x.get_den()));
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = Int(v[i] * l);
  return primitive(scaled);
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Int det(const IntMatrix& m) {
  if (!m.square()) throw Error("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return s * a(n - 1, n - 1);
}

Rat det(const RatMatrix& m) {
  if (!m.square()) throw Error("det: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }

RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs) {
  if (!m.square()) throw Error("solve: matrix is not square");
  if (rhs.rows() != m.rows()) throw Error("solve: dimension mismatch");
  const std::size_t n = m.rows();
  const std::size_t k = rhs.cols();
  RatMatrix a = m;
  RatMatrix x = rhs;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SemanticError("singular matrix");
    a.swap_rows(c, p);
    x.swap_rows(c, p);
    Rat inv = 1 / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < k; ++j) x(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < k; ++j) x(i, j) -= f * x(c, j);
    }
  }
  return x;
}

RatVector solve(const RatMatrix& m, const RatVector& rhs) {
  RatMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  return solve(m, b).column_vector(0);
}

RatMatrix inverse(const RatMatrix& m) { return solve(m, RatMatrix::identity(m.rows())); }

IntVector hyperplane_normal(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() + 1 != n) throw Error("hyperplane_normal: need n-1 rows in dimension n");
  IntVector normal(n);
  for (std::size_t skip = 0; skip < n; ++skip) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        minor(i, cc++) = rows(i, j);
      }
    }
    Int dm = det(minor);
    normal[skip] = (skip % 2 == 0) ? dm : Int(-dm);
  }
  return normal;
}

// ---------------------------------------------------------------------------

SmithDecomposition smith_normal_form(const IntMatrix& B) {
  if (!B.square()) throw Error("smith_normal_form: matrix is not square");
  if (det(B) == 0) throw SemanticError("singular matrix");
  const std::size_t n = B.rows();
  IntMatrix S = B;
  IntMatrix V = IntMatrix::identity(n);
  IntMatrix W = IntMatrix::identity(n);

  // Invariant: S = W^{-1} B V.
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {  // row_dst += q row_src
    for (std::size_t j = 0; j < n; ++j) S(dst, j) += q * S(src, j);
    for (std::size_t i = 0; i < n; ++i) W(i, src) -= q * W(i, dst);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {  // col_dst += q col_src
    for (std::size_t i = 0; i < n; ++i) S(i, dst) += q * S(i, src);
    for (std::size_t i = 0; i < n; ++i) V(i, dst) += q * V(i, src);
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Int a = abs(S(i, j));
          if (best == 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      S.swap_rows(t, pi);
      W.swap_cols(t, pi);
      S.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (S(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: every remaining entry must be a multiple of the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < n && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t i = 0; i < n; ++i) W(i, t) = -W(i, t);
    }
  }

  SmithDecomposition out{std::move(V), std::move(W), IntVector(n)};
  for (std::size_t i = 0; i < n; ++i) out.s[i] = S(i, i);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct GramSchmidt {
  RatMatrix mu;       // mu(i, j) for j < i
  RatVector norm_sq;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const RatMatrix& b) {
  const std::size_t n = b.rows();
  const std::size_t dim = b.cols();
  GramSchmidt gs{RatMatrix(n, n, Rat(0)), RatVector(n)};
  std::vector<RatVector> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = b.row_vector(i);
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu(i, j) = dot(b.row_vector(i), star[j]) / gs.norm_sq[j];
      for (std::size_t k = 0; k < dim; ++k) star[i][k] -= gs.mu(i, j) * star[j][k];
    }
    gs.norm_sq[i] = dot(star[i], star[i]);
    if (gs.norm_sq[i] == 0) throw SemanticError("lll_reduce: rows are linearly dependent");
  }
  return gs;
}

Int round_rat(const Rat& x) { return floor_rat(x + Rat(1, 2)); }

}  // namespace

namespace {

// round(a / b) for b > 0, halves rounded up.
Int round_div(const Int& a, const Int& b) {
  Int q;
  Int num = 2 * a + b;
  Int den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Integral LLL (all Gram-Schmidt data kept as integers d_i, lambda_ij).
// Indices are 0-based; dd[i + 1] holds d_i and dd[0] = 1.
void integral_lll(IntMatrix& b, IntMatrix& T, const Rat& delta) {
  const std::size_t n = b.rows();
  const std::size_t dim = b.cols();
  if (n < 2) return;
  const Int dp = delta.get_num();
  const Int dq = delta.get_den();
  IntMatrix lam(n, n, Int(0));
  std::vector<Int> dd(n + 1, Int(0));
  dd[0] = 1;

  auto row_dot = [&](std::size_t i, std::size_t j) {
    Int s = 0;
    for (std::size_t c = 0; c < dim; ++c) s += b(i, c) * b(j, c);
    return s;
  };
  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(2 * lam(k, l)) <= dd[l + 1]) return;
    Int q = round_div(lam(k, l), dd[l + 1]);
    for (std::size_t c = 0; c < dim; ++c) b(k, c) -= q * b(l, c);
    for (std::size_t c = 0; c < n; ++c) T(k, c) -= q * T(l, c);
    lam(k, l) -= q * dd[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam(k, i) -= q * lam(l, i);
  };
  auto swap = [&](std::size_t k, std::size_t kmax) {
    b.swap_rows(k, k - 1);
    T.swap_rows(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam(k, j), lam(k - 1, j));
    const Int l = lam(k, k - 1);
    const Int B = exact_div(dd[k - 1] * dd[k + 1] + l * l, dd[k]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Int t = lam(i, k);
      lam(i, k) = exact_div(dd[k + 1] * lam(i, k - 1) - l * t, dd[k]);
      lam(i, k - 1) = exact_div(B * t + l * lam(i, k), dd[k + 1]);
    }
    dd[k] = B;
  };

  dd[1] = row_dot(0, 0);
  if (dd[1] == 0) throw SemanticError("lll_reduce: rows are linearly dependent");
  std::size_t k = 1;
  std::size_t kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Int u = row_dot(k, j);
        for (std::size_t i = 0; i < j; ++i) u = exact_div(dd[i + 1] * u - lam(k, i) * lam(j, i), dd[i]);
        if (j < k) {
          lam(k, j) = u;
        } else {
          if (u == 0) throw SemanticError("lll_reduce: rows are linearly dependent");
          dd[k + 1] = u;
        }
      }
    }
    for (;;) {
      reduce(k, k - 1);
      // Lovasz: d_k d_{k-2} >= delta d_{k-1}^2 - lambda^2, scaled by dq.
      const Int& l = lam(k, k - 1);
      if (dq * dd[k + 1] * dd[k - 1] < dp * dd[k] * dd[k] - dq * l * l) {
        swap(k, kmax);
        if (k > 1) --k;
      } else {
        for (std::size_t ll = k - 1; ll-- > 0;) reduce(k, ll);
        ++k;
        break;
      }
    }
  }
}

}  // namespace

LllResult lll_reduce(const RatMatrix& basis, const Rat& delta) {
  const std::size_t n = basis.rows();
  const std::size_t dim = basis.cols();
  if (rank(basis) != n) throw SemanticError("lll_reduce: rows are linearly dependent");

  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) scale = lcm(scale, Int(basis(i, j).get_den()));
  IntMatrix b(n, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = Rat(basis(i, j) * scale).get_num();
  IntMatrix T = IntMatrix::identity(n);
  integral_lll(b, T, delta);

  RatMatrix out(n, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = make_rat(b(i, j), scale);
  return {std::move(out), std::move(T)};
}

IntMatrix lll_reduce(const IntMatrix& basis, const Rat& delta) {
  if (rank(basis) != basis.rows()) throw SemanticError("lll_reduce: rows are linearly dependent");
  IntMatrix b = basis;
  IntMatrix T = IntMatrix::identity(b.rows());
  integral_lll(b, T, delta);
  return b;
}

bool is_lll_reduced(const RatMatrix& basis, const Rat& delta) {
  GramSchmidt gs = gram_schmidt(basis);
  const std::size_t n = basis.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu(i, j)) > Rat(1, 2)) return false;
  for (std::size_t k = 1; k < n; ++k) {
    const Rat& m = gs.mu(k, k - 1);
    if (gs.norm_sq[k] < (delta - m * m) * gs.norm_sq[k - 1]) return false;
  }
  return true;
}

std::vector<RatVector> lattice_vectors_within(const RatMatrix& basis, const Rat& radius_sq) {
  const std::size_t n = basis.rows();
  const std::size_t dim = basis.cols();
  GramSchmidt gs = gram_schmidt(basis);
  std::vector<RatVector> out;
  std::vector<Int> coeff(n, 0);

  // Depth-first over levels n-1 .. 0; `used` is the squared length already
  // committed by the levels above.
  auto recurse = [&](auto&& self, std::size_t level, const Rat& used) -> void {
    Rat center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= gs.mu(j, level) * coeff[j];
    const Rat budget = radius_sq - used;
    auto visit = [&](const Int& c) -> bool {
      Rat off = c - center;
      Rat cost = off * off * gs.norm_sq[level];
      if (cost > budget) return false;
      coeff[level] = c;
      if (level == 0) {
        bool nonzero = false, canonical = false;
        for (std::size_t i = 0; i < n; ++i)
          if (coeff[i] != 0) {
            nonzero = true;
            canonical = coeff[i] > 0;
            break;
          }
        if (nonzero && canonical) {
          RatVector v(dim, Rat(0));
          for (std::size_t i = 0; i < n; ++i)
            if (coeff[i] != 0)
              for (std::size_t k = 0; k < dim; ++k) v[k] += coeff[i] * basis(i, k);
          out.push_back(std::move(v));
        }
      } else {
        self(self, level - 1, used + cost);
      }
      return true;
    };
    Int start = round_rat(center);
    for (Int c = start;; ++c)
      if (!visit(c)) break;
    for (Int c = start - 1;; --c)
      if (!visit(c)) break;
    coeff[level] = 0;
  };
  if (n > 0) recurse(recurse, n - 1, Rat(0));
  return out;
}

}  // namespace latcount
