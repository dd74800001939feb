#include "latcount/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latcount/io.hpp"
#include "latcount/oracle.hpp"

namespace latcount::cli {

namespace {

// Unreadable input file; reported like a parse error.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string file;
  std::string at;
  std::string max_index = "1";
  bool json = false;
  bool verify = false;
  bool genfun = false;
  long seed = 0;
  long vertex = -1;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Int max_index_of(const Options& o) {
  Int L;
  if (L.set_str(o.max_index, 10) != 0 || L < 1) throw SemanticError("--max-index must be a positive integer");
  return L;
}

long first_m(const Options& o) {
  if (o.seed < 0) throw SemanticError("--seed must be nonnegative");
  return 1 + o.seed;
}

nlohmann::json envelope(const Int& count, std::size_t vertices, std::size_t cones, std::size_t depth) {
  return {{"count", count.get_str()}, {"num_vertices", vertices}, {"num_cones", cones}, {"max_depth", depth}};
}

// Runs the oracle for --verify. Returns the exit code contribution.
int verify(const HPolytope& P, const Int& count, const Options& o, std::ostream& err) {
  Int truth;
  try {
    truth = brute_count(P, o.oracle_cap);
  } catch (const SemanticError& e) {
    err << "warning: verification skipped: " << e.what() << "\n";
    return ok;
  }
  if (truth != count) {
    err << "verify: mismatch, oracle count is " << truth.get_str() << "\n";
    return verify_mismatch;
  }
  return ok;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  HPolytope P = parse_polytope(read_file(o.file));
  CountResult r = count_polytope_detailed(P, max_index_of(o), first_m(o));
  if (o.json) out << envelope(r.count, r.num_vertices, r.num_cones, r.max_depth).dump() << "\n";
  else out << r.count.get_str() << "\n";
  return o.verify ? verify(P, r.count, o, err) : ok;
}

int cmd_pcount(const Options& o, std::ostream& out, std::ostream& err) {
  ParametricPolytope pp = parse_parametric(read_file(o.file));
  RatVector q = parse_rational_list(o.at);
  if (q.size() != pp.num_params())
    throw SemanticError("--at needs " + std::to_string(pp.num_params()) + " values, got " + std::to_string(q.size()));
  ParametricCounter pc(pp, max_index_of(o), first_m(o));
  Evaluation e = pc.evaluate(q);
  if (!e.diagnostic.empty()) err << "note: " << e.diagnostic << "\n";
  if (o.json) {
    nlohmann::json j = envelope(e.count, pc.vertices().size(), pc.num_cones(), pc.max_depth());
    if (!e.diagnostic.empty()) j["diagnostic"] = e.diagnostic;
    out << j.dump() << "\n";
  } else {
    out << e.count.get_str() << "\n";
  }
  return o.verify ? verify(pp.instantiate(q), e.count, o, err) : ok;
}

int cmd_chambers(const Options& o, std::ostream& out, std::ostream&) {
  ParametricPolytope pp = parse_parametric(read_file(o.file));
  ParametricCounter pc(pp, max_index_of(o), first_m(o));
  if (o.json) {
    out << chambers_json(pc.halfopen(), pc.vertices()).dump() << "\n";
    return ok;
  }
  const auto& vs = pc.vertices();
  for (std::size_t j = 0; j < vs.size(); ++j) {
    out << "vertex " << j << ": basis {";
    for (std::size_t i = 0; i < vs[j].basis.size(); ++i) out << (i ? "," : "") << vs[j].basis[i];
    out << "} v(q) = " << format_affine(vs[j].M, vs[j].c);
    if (!vs[j].activity_full_dimensional) out << "  [lower-dimensional activity]";
    out << "\n";
  }
  const auto& cs = pc.halfopen();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out << "chamber " << i << ": vertices";
    for (auto j : cs[i].vertices) out << " " << j;
    out << "\n";
    for (const auto& r : cs[i].region.rows) out << "  " << format_row(r) << "\n";
  }
  return ok;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream&) {
  HPolytope P = parse_polytope(read_file(o.file));
  std::vector<Vertex> vs = enumerate_vertices(P);
  if (o.vertex >= static_cast<long>(vs.size()))
    throw SemanticError("vertex index " + std::to_string(o.vertex) + " out of range (" +
                        std::to_string(vs.size()) + " vertices)");
  const Int L = max_index_of(o);
  SignedConeSum all;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (o.vertex >= 0 && static_cast<long>(k) != o.vertex) continue;
    SignedConeSum s = decompose_cone(vertex_cone(P, vs[k]), L);
    all.terms.insert(all.terms.end(), s.terms.begin(), s.terms.end());
  }
  if (o.genfun) {
    GenFun g;
    for (const auto& t : all.terms) g.terms.push_back(gf_term(t.cone, t.cone.base.apex, t.sign));
    out << to_json(g).dump() << "\n";
  } else {
    out << to_json(all).dump() << "\n";
  }
  return ok;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  HPolytope P = parse_polytope(read_file(o.file));
  out << brute_count(P, o.oracle_cap).get_str() << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact lattice-point counting in rational polytopes", "latcount"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool counting) {
    sub->add_option("FILE", o.file, "input file ('-' for stdin)")->required();
    sub->add_option("--max-index", o.max_index, "stop the decomposition at cone index <= L");
    sub->add_option("--seed", o.seed, "offset of the specialization direction search");
    if (counting) {
      sub->add_flag("--json", o.json, "JSON output");
      sub->add_flag("--verify", o.verify, "cross-check against brute-force enumeration");
      sub->add_option("--oracle-cap", o.oracle_cap, "largest box the oracle scans");
    }
  };
  CLI::App* count = app.add_subcommand("count", "count lattice points of a polytope");
  common(count, true);
  CLI::App* pcount = app.add_subcommand("pcount", "evaluate a parametric counting function");
  common(pcount, true);
  pcount->add_option("--at", o.at, "parameter values v1,...,vp (rationals allowed)")->required();
  CLI::App* chambers = app.add_subcommand("chambers", "list parametric vertices and half-open chambers");
  common(chambers, false);
  chambers->add_flag("--json", o.json, "JSON output");
  CLI::App* decompose = app.add_subcommand("decompose", "dump the signed cone decomposition");
  common(decompose, false);
  decompose->add_option("--vertex", o.vertex, "only the cone at this vertex (0-based)");
  decompose->add_flag("--genfun", o.genfun, "dump the generating function instead");
  CLI::App* oracle = app.add_subcommand("oracle", "count by brute-force enumeration");
  oracle->add_option("FILE", o.file, "input file ('-' for stdin)")->required();
  oracle->add_option("--oracle-cap", o.oracle_cap, "largest box the oracle scans");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out, err);
    if (pcount->parsed()) return cmd_pcount(o, out, err);
    if (chambers->parsed()) return cmd_chambers(o, out, err);
    if (decompose->parsed()) return cmd_decompose(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return parse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return semantic;
  }
  return usage;
}

}  // namespace latcount::cli
