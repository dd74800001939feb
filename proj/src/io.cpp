#include "latcount/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace latcount {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
  std::size_t end_column;
};

// Non-blank lines with comments removed; '|' is always its own token.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}, raw.size() + 1};
    std::size_t i = 0;
    while (i < raw.size()) {
      unsigned char ch = static_cast<unsigned char>(raw[i]);
      if (std::isspace(ch)) {
        ++i;
      } else if (ch == '|') {
        line.tokens.push_back({"|", i + 1});
        ++i;
      } else {
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '|') ++j;
        line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
        i = j;
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int to_int(const Line& line, const Token& t) {
  if (!is_integer(t.text)) throw ParseError(line.number, t.column, "expected an integer, got '" + t.text + "'");
  return Int(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

// Splits a row at '|' separators. With separators, group sizes must match
// `arity` exactly; without, the total count must.
std::vector<IntVector> parse_row(const Line& line, const std::vector<std::size_t>& arity) {
  std::vector<std::vector<const Token*>> groups(1);
  for (const auto& t : line.tokens) {
    if (t.text == "|") groups.emplace_back();
    else groups.back().push_back(&t);
  }
  std::size_t total = 0;
  for (auto a : arity) total += a;

  std::vector<const Token*> flat;
  if (groups.size() == 1) {
    flat = groups.front();
    if (flat.size() != total) {
      std::size_t col = flat.size() > total ? flat[total]->column : line.end_column;
      throw ParseError(line.number, col,
                       "expected " + std::to_string(total) + " integers, found " + std::to_string(flat.size()));
    }
  } else {
    if (groups.size() != arity.size())
      throw ParseError(line.number, line.tokens.front().column,
                       "expected " + std::to_string(arity.size()) + " '|'-separated groups, found " +
                           std::to_string(groups.size()));
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].size() != arity[g]) {
        std::size_t col = groups[g].size() > arity[g] ? groups[g][arity[g]]->column
                          : groups[g].empty()         ? line.tokens.front().column
                                                      : groups[g].back()->column;
        throw ParseError(line.number, col,
                         "group " + std::to_string(g + 1) + " needs " + std::to_string(arity[g]) +
                             " integers, found " + std::to_string(groups[g].size()));
      }
      flat.insert(flat.end(), groups[g].begin(), groups[g].end());
    }
  }
  std::vector<IntVector> out;
  std::size_t k = 0;
  for (auto a : arity) {
    IntVector v;
    for (std::size_t i = 0; i < a; ++i) v.push_back(to_int(line, *flat[k++]));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> parse_header(const Line& line, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < line.tokens.size(); ++i) {
    if (i >= count)
      throw ParseError(line.number, line.tokens[i].column, "header has too many fields");
    Int v = to_int(line, line.tokens[i]);
    if (v < 0) throw ParseError(line.number, line.tokens[i].column, "header field must be nonnegative");
    if (!v.fits_ulong_p() || v > 100000000)
      throw ParseError(line.number, line.tokens[i].column, "header field too large");
    out.push_back(v.get_ui());
  }
  if (out.size() < count)
    throw ParseError(line.number, line.end_column,
                     "header needs " + std::to_string(count) + " fields, found " + std::to_string(out.size()));
  if (out[0] == 0) throw ParseError(line.number, line.tokens[0].column, "dimension must be positive");
  return out;
}

ParseError missing_rows(const std::vector<Line>& lines, std::size_t expected, std::size_t found) {
  std::size_t at = lines.empty() ? 1 : lines.back().number + 1;
  return ParseError(at, 1, "expected " + std::to_string(expected) + " constraint rows, found " +
                               std::to_string(found));
}

}  // namespace

HPolytope parse_polytope(std::string_view text) {
  std::vector<Line> lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  auto h = parse_header(lines[0], 2);
  const std::size_t d = h[0], m = h[1];
  if (lines.size() < m + 1) throw missing_rows(lines, m, lines.size() - 1);
  HPolytope P{IntMatrix(m, d), IntVector(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = lines[i + 1];
    IntVector row = parse_row(line, {d + 1}).front();
    for (std::size_t j = 0; j < d; ++j) P.A(i, j) = row[j];
    P.b[i] = row[d];
  }
  if (lines.size() > m + 1) {
    const Line& extra = lines[m + 1];
    throw ParseError(extra.number, extra.tokens.front().column, "unexpected content after the last row");
  }
  return P;
}

ParametricPolytope parse_parametric(std::string_view text) {
  std::vector<Line> lines = lex(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  auto h = parse_header(lines[0], 3);
  const std::size_t d = h[0], m = h[1], p = h[2];
  if (p == 0) throw ParseError(lines[0].number, lines[0].tokens[2].column, "number of parameters must be positive");

  ParametricPolytope pp{IntMatrix(m, d), IntMatrix(m, p), IntVector(m), {}};
  std::size_t next = 1;
  for (std::size_t i = 0; i < m; ++i, ++next) {
    if (next >= lines.size() || lines[next].tokens.front().text == "Q:") throw missing_rows(
        std::vector<Line>(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(next)), m, i);
    auto parts = parse_row(lines[next], {d, p, 1});
    for (std::size_t j = 0; j < d; ++j) pp.A(i, j) = parts[0][j];
    for (std::size_t k = 0; k < p; ++k) pp.E(i, k) = parts[1][k];
    pp.f[i] = parts[2][0];
  }
  if (next < lines.size()) {
    Line q = lines[next];
    if (q.tokens.front().text != "Q:")
      throw ParseError(q.number, q.tokens.front().column, "unexpected content after the last row (expected 'Q:')");
    q.tokens.erase(q.tokens.begin());
    std::vector<Line> rows;
    if (!q.tokens.empty()) rows.push_back(std::move(q));
    for (++next; next < lines.size(); ++next) rows.push_back(lines[next]);
    for (const auto& line : rows) {
      auto parts = parse_row(line, {p, 1});
      pp.Q.add_row(parts[0], Rat(parts[1][0]));
    }
  }
  return pp;
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    item = a == std::string::npos ? "" : item.substr(a, b - a + 1);
    std::size_t slash = item.find('/');
    std::string num = item.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : item.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.find_first_not_of("+0") == std::string::npos)
      throw ParseError(1, pos + 1, "expected a rational number, got '" + item + "'");
    out.push_back(make_rat(Int(num[0] == '+' ? num.substr(1) : num), Int(den[0] == '+' ? den.substr(1) : den)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string rat_string(const Rat& x) { return x.get_str(); }

nlohmann::json to_json(const IntVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

nlohmann::json to_json(const RatVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(rat_string(x));
  return j;
}

nlohmann::json to_json(const SignedConeSum& sum) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : sum.terms) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto& r : t.cone.base.rays) rays.push_back(to_json(r));
    j.push_back({{"sign", t.sign}, {"apex", to_json(t.cone.base.apex)}, {"rays", rays}, {"sigma", t.cone.sigma}});
  }
  return j;
}

nlohmann::json to_json(const GenFun& g) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : g.terms) {
    nlohmann::json num = nlohmann::json::array();
    nlohmann::json den = nlohmann::json::array();
    for (const auto& a : t.numerator) num.push_back(to_json(a));
    for (const auto& b : t.denominator) den.push_back(to_json(b));
    terms.push_back({{"sign", t.sign}, {"numerator", num}, {"denominator", den}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const HalfOpenPolyhedron& region) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : region.rows)
    rows.push_back({{"normal", to_json(r.normal)}, {"rhs", rat_string(r.rhs)}, {"strict", r.strict}});
  return rows;
}

nlohmann::json chambers_json(const std::vector<Chamber>& chambers, const std::vector<ParametricVertex>& vertices) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : chambers) {
    nlohmann::json vs = nlohmann::json::array();
    for (auto j : c.vertices) {
      const ParametricVertex& v = vertices[j];
      nlohmann::json M = nlohmann::json::array();
      for (std::size_t i = 0; i < v.M.rows(); ++i) M.push_back(to_json(v.M.row_vector(i)));
      vs.push_back({{"M", M}, {"c", to_json(v.c)}, {"basis", v.basis}});
    }
    out.push_back({{"region", to_json(c.region)}, {"vertices", vs}});
  }
  return out;
}

namespace {

// Linear form sum_i coef_i var_{i+1} + constant, e.g. "2 q1 - 1/2 q2 + 3".
std::string format_linear(const RatVector& coef, const std::optional<Rat>& constant, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rat& a, const std::string& name) {
    if (a == 0) return;
    Rat mag = abs(a);
    if (first) os << (a < 0 ? "-" : "");
    else os << (a < 0 ? " - " : " + ");
    if (name.empty()) os << rat_string(mag);
    else if (mag == 1) os << name;
    else os << rat_string(mag) << " " << name;
    first = false;
  };
  for (std::size_t i = 0; i < coef.size(); ++i) term(coef[i], var + std::to_string(i + 1));
  if (constant) term(*constant, "");
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string format_row(const HalfOpenPolyhedron::Row& row, const std::string& var) {
  return format_linear(to_rat(row.normal), std::nullopt, var) + (row.strict ? " < " : " <= ") + rat_string(row.rhs);
}

std::string format_affine(const RatMatrix& M, const RatVector& c, const std::string& var) {
  std::string s = "(";
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i) s += ", ";
    s += format_linear(M.row_vector(i), c[i], var);
  }
  return s + ")";
}

}  // namespace latcount
