// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the fixed seeds make every run identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "latcount/cli.hpp"
#include "support.hpp"

using namespace latcount;
using namespace latcount::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail, double secs) {
  std::printf("criterion %2d %-34s %s  (%s; %.2fs)\n", id, name, pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Runs one criterion; an exception counts as a failure.
void run(int id, const char* name, const std::function<bool(std::string&)>& body, double limit_secs) {
  auto t0 = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = seconds_since(t0);
  if (pass && secs > limit_secs) {
    pass = false;
    detail += "; over the time limit";
  }
  report(id, name, pass, detail, secs);
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

// Criterion 3's instances, shared by 8 and 9.
std::vector<HPolytope> random_instances() {
  Rng rng(20240521);
  std::vector<HPolytope> out;
  std::size_t k = 0;
  while (out.size() < 200) {
    const std::size_t d = 2 + (k++ % 3);
    if (auto P = random_polytope(rng, d, 2000000)) out.push_back(*P);
  }
  return out;
}

const std::vector<HPolytope>& instances() {
  static const std::vector<HPolytope> v = random_instances();
  return v;
}

bool criterion1(std::string& detail) {
  std::string file = std::string(LATCOUNT_DATA_DIR) + "/ex1.txt";
  int wrong = 0;
  for (int q = 0; q <= 12; ++q) {
    const long low = q + 1, high = q / 2 + 4;
    const long expected = q <= 6 ? low : high;
    if (q == 6 && low != high) ++wrong;
    int code = 0;
    std::string got = cli_out({"pcount", file, "--at", std::to_string(q)}, &code);
    if (code != 0 || got != std::to_string(expected) + "\n") ++wrong;
  }
  detail = std::to_string(13 - wrong) + "/13 values exact";
  return wrong == 0;
}

bool criterion2(std::string& detail) {
  const std::vector<int> sigma{-1, 1, -1};
  const RatVector alpha{-1, 1, 1};
  // (l, m, expected)
  const int table[9][3] = {{0, 3, -1}, {0, 2, 1}, {0, 1, 1}, {1, 3, -1}, {1, 2, -1},
                           {2, 1, -1}, {2, 3, 1}, {3, 2, -1}, {3, 1, -1}};
  int right = 0;
  for (const auto& row : table)
    if (facet_strictness(sigma, alpha, row[0], row[1]) == row[2]) ++right;
  detail = std::to_string(right) + "/9 flags";
  return right == 9;
}

bool criterion3(std::string& detail) {
  int bad = 0;
  for (const auto& P : instances())
    if (count_polytope(P, 1) != brute_count(P, 2000000)) ++bad;
  detail = std::to_string(instances().size()) + " instances, " + std::to_string(bad) + " mismatches";
  return bad == 0;
}

bool criterion4(std::string& detail) {
  Rng rng(4);
  long checked = 0, bad = 0;
  for (int c = 0; c < 50; ++c) {
    const std::size_t d = 2 + c % 3;
    RatVector apex = c % 2 ? random_apex(rng, d) : RatVector(d, Rat(0));
    ClosedCone C = random_pointed_cone(rng, d, apex);
    std::vector<HalfOpenCone> pieces = halfopen_triangulate(C);
    for (int s = 0; s < 10000; ++s) {
      RatVector x = sample_near_cone(rng, apex, C.rays);
      int sum = 0;
      for (const auto& p : pieces) sum += p.contains(x);
      if (sum != (cone_contains(C, x) ? 1 : 0)) ++bad;
      ++checked;
    }
  }
  detail = std::to_string(checked) + " points, " + std::to_string(bad) + " violations";
  return bad == 0;
}

struct DecompositionRun {
  HalfOpenCone cone;
  SignedConeSum sum;
  DecompositionStats stats;
};

const std::vector<DecompositionRun>& decomposition_runs() {
  static const std::vector<DecompositionRun> runs = [] {
    Rng rng(5);
    std::vector<DecompositionRun> out;
    for (int c = 0; c < 50; ++c) {
      const std::size_t d = 2 + c % 3;
      const long range = d == 2 ? 80 : d == 3 ? 20 : 9;
      HalfOpenCone cone = random_halfopen_cone(rng, d, range, 2, 5000, c % 2 == 1);
      DecompositionStats stats;
      SignedConeSum sum = signed_decompose(cone, 1, &stats);
      out.push_back({std::move(cone), std::move(sum), stats});
    }
    return out;
  }();
  return runs;
}

bool criterion5(std::string& detail) {
  Rng rng(55);
  long checked = 0, bad = 0;
  for (const auto& run : decomposition_runs()) {
    const std::size_t d = run.cone.dimension();
    FastCone whole(run.cone);
    std::vector<std::pair<int, FastCone>> terms;
    for (const auto& t : run.sum.terms) terms.emplace_back(t.sign, FastCone(t.cone));
    std::vector<long> x(d, -7);
    for (;;) {
      long sum = 0;
      for (const auto& [s, c] : terms) sum += s * c.contains(x);
      if (sum != (whole.contains(x) ? 1 : 0)) ++bad;
      ++checked;
      std::size_t i = 0;
      while (i < d && x[i] == 7) x[i++] = -7;
      if (i == d) break;
      ++x[i];
    }
    // Rational points on and near the facets of the cone and of its pieces.
    for (int s = 0; s < 1000; ++s) {
      const auto& rays = s % 2 ? run.cone.base.rays : run.sum.terms[s % run.sum.terms.size()].cone.base.rays;
      RatVector p = sample_near_cone(rng, run.cone.base.apex, rays);
      long sum = 0;
      for (const auto& t : run.sum.terms) sum += t.sign * t.cone.contains(p);
      if (sum != (run.cone.contains(p) ? 1 : 0)) ++bad;
      ++checked;
    }
  }
  detail = std::to_string(decomposition_runs().size()) + " cones, " + std::to_string(checked) + " points, " +
           std::to_string(bad) + " violations";
  return bad == 0;
}

bool criterion6(std::string& detail) {
  int bad = 0;
  std::size_t worst = 0;
  for (const auto& run : decomposition_runs()) {
    const double d = static_cast<double>(run.cone.dimension());
    const double D = run.cone.index().get_d();
    const std::size_t bound =
        static_cast<std::size_t>(std::floor(1 + std::log2(std::log2(D)) / std::log2(d / (d - 1)))) + 1;
    if (!run.stats.strict_descent || run.stats.max_depth > bound) ++bad;
    worst = std::max(worst, run.stats.max_depth);
  }
  detail = "max depth " + std::to_string(worst) + ", " + std::to_string(bad) + " violations";
  return bad == 0;
}

bool criterion7(std::string& detail) {
  Rng rng(7);
  int bad = 0;
  for (int c = 0; c < 100; ++c) {
    const std::size_t d = 1 + c % 4;
    HalfOpenCone cone = random_halfopen_cone(rng, d, d == 1 ? 30 : 6, 1, 400, c % 3 != 0);
    std::vector<IntVector> pts = parallelepiped_points(cone);
    std::set<IntVector> distinct(pts.begin(), pts.end());
    bool ok = Int(pts.size()) == cone.index() && distinct.size() == pts.size();
    for (const auto& p : pts) {
      RatVector lambda = cone.base.coefficients(to_rat(p));
      for (std::size_t j = 0; j < d; ++j)
        ok = ok && (cone.sigma[j] > 0 ? lambda[j] >= 0 && lambda[j] < 1 : lambda[j] > 0 && lambda[j] <= 1);
    }
    if (!ok) ++bad;
  }
  detail = "100 cones, " + std::to_string(bad) + " failures";
  return bad == 0;
}

bool criterion8(std::string& detail) {
  int bad = 0;
  for (const auto& P : instances()) {
    Int c1 = count_polytope(P, 1);
    if (count_polytope(P, 10) != c1 || count_polytope(P, 100) != c1) ++bad;
  }
  detail = std::to_string(instances().size()) + " instances, " + std::to_string(bad) + " disagreements";
  return bad == 0;
}

bool criterion9(std::string& detail) {
  int bad = 0;
  for (const auto& P : instances()) {
    GenFun g = polytope_genfun(P, 1);
    std::vector<IntVector> mus = generic_directions(g, 3);
    std::set<IntVector> distinct(mus.begin(), mus.end());
    if (distinct.size() != 3) {
      ++bad;
      continue;
    }
    Int first = specialize_at_one(g, mus[0]);
    if (specialize_at_one(g, mus[1]) != first || specialize_at_one(g, mus[2]) != first) ++bad;
  }
  detail = std::to_string(instances().size()) + " instances x 3 directions, " + std::to_string(bad) +
           " disagreements";
  return bad == 0;
}

bool criterion10(std::string& detail) {
  int bad = 0;
  for (std::size_t d : {2, 3}) {
    ParametricPolytope pp = dilated_simplex(d);
    for (int t = 0; t <= 10; ++t) {
      RatVector q{Rat(t)};
      Evaluation e = evaluate_count(pp, q);
      if (!e.diagnostic.empty() || e.count != brute_count(pp.instantiate(q))) ++bad;
    }
  }
  detail = "22 dilations, " + std::to_string(bad) + " mismatches";
  return bad == 0;
}

// Random q in the box [-lo, hi]^p, a third of them moved onto a chamber or
// activity hyperplane.
RatVector random_q(Rng& rng, const ParametricCounter& pc, long hi) {
  const std::size_t p = pc.polytope().num_params();
  RatVector q(p);
  for (auto& x : q) {
    x = uniform(rng, 0, 1) ? Rat(uniform(rng, -2, hi)) : rat(uniform(rng, -8, 4 * hi), uniform(rng, 1, 4));
  }
  if (uniform(rng, 0, 2) != 0) return q;
  std::vector<const HalfOpenPolyhedron::Row*> rows;
  for (const auto& c : pc.halfopen())
    for (const auto& r : c.region.rows) rows.push_back(&r);
  for (const auto& [j, region] : pc.halfopen_activity())
    for (const auto& r : region.rows) rows.push_back(&r);
  if (rows.empty()) return q;
  const auto& row = *rows[uniform(rng, 0, rows.size() - 1)];
  std::size_t k = 0;
  while (row.normal[k] == 0) ++k;
  Rat rest = row.rhs;
  for (std::size_t i = 0; i < p; ++i)
    if (i != k) rest -= row.normal[i] * q[i];
  q[k] = rest / row.normal[k];
  return q;
}

bool criterion11(std::string& detail) {
  std::vector<std::pair<ParametricPolytope, long>> cases = {
      {segment_family(), 14}, {dilated_simplex(2), 10}, {dilated_simplex(3), 8}};
  ParametricPolytope rect{IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, IntMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}},
                          IntVector{0, 0, 0, 0}, {}};
  rect.Q.add_row({-1, 0}, 0);
  rect.Q.add_row({0, -1}, 0);
  cases.push_back({rect, 8});
  // x, y >= 0, x + y <= s, x - y <= t, 2y <= s + 3; several vertex changes.
  ParametricPolytope mixed{IntMatrix{{-1, 0}, {0, -1}, {1, 1}, {1, -1}, {0, 2}}, IntMatrix{{0, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 0}},
                           IntVector{0, 0, 0, 0, 3}, {}};
  mixed.Q.add_row({-1, 0}, 0);
  cases.push_back({mixed, 10});

  Rng rng(11);
  int bad = 0, checked = 0, boundary = 0;
  for (const auto& [pp, hi] : cases) {
    ParametricCounter pc(pp);
    for (int s = 0; s < 50; ++s) {
      RatVector q = random_q(rng, pc, hi);
      Evaluation a = pc.evaluate(q);
      Evaluation b = pc.evaluate_by_activity(q);
      ++checked;
      bool on_boundary = false;
      for (const auto& c : pc.halfopen())
        for (const auto& r : c.region.rows)
          if (dot(r.normal, q) == r.rhs) on_boundary = true;
      boundary += on_boundary;
      bool ok = a.count == b.count;
      if (pp.in_parameter_space(q)) ok = ok && a.count == brute_count(pp.instantiate(q));
      if (!ok) ++bad;
    }
  }
  detail = std::to_string(checked) + " q (" + std::to_string(boundary) + " on chamber boundaries), " +
           std::to_string(bad) + " disagreements";
  return bad == 0 && boundary > 0;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  run(1, "1-D family c(q), q = 0..12", criterion1, 1.0);
  run(2, "facet strictness table", criterion2, 1.0);
  run(3, "oracle equivalence (200 polytopes)", criterion3, 300.0);
  run(4, "exact half-open triangulation", criterion4, 600.0);
  run(5, "exact signed decomposition", criterion5, 600.0);
  run(6, "index descent and depth bound", criterion6, 600.0);
  run(7, "parallelepiped cardinality", criterion7, 600.0);
  run(8, "stopped decomposition l=1,10,100", criterion8, 600.0);
  run(9, "specialization robustness", criterion9, 600.0);
  run(10, "dilated simplices t = 0..10", criterion10, 60.0);
  run(11, "chamber vs activity evaluation", criterion11, 600.0);
  std::printf("%d failed, total %.1fs\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
