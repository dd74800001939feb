#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "latcount/io.hpp"

using namespace latcount;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(LATCOUNT_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Line and column of the error, with its message.
std::tuple<std::size_t, std::size_t, std::string> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column(), e.what()};
  }
  return {0, 0, ""};
}

}  // namespace

TEST(ParsePolytope, UnitSquare) {
  HPolytope P = parse_polytope("2 4\n1 0 1\n-1 0 0\n0 1 1\n0 -1 0\n");
  EXPECT_EQ(P.A, (IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  EXPECT_EQ(P.b, (IntVector{1, 0, 1, 0}));
}

TEST(ParsePolytope, CommentsAndBlankLines) {
  HPolytope P = parse_polytope(data("square.txt") + "\n\n# trailing\n");
  EXPECT_EQ(P.num_constraints(), 4u);
  EXPECT_EQ(parse_polytope("1 1 # header\n\n  3   7\n").b, (IntVector{7}));
}

TEST(ParsePolytope, MissingRowReportedAtExpectedLine) {
  auto [line, col, msg] = error_of([] { parse_polytope("2 3\n1 0 1\n-1 0 0\n"); });
  EXPECT_EQ(line, 4u);
  EXPECT_NE(msg.find("expected 3 constraint rows, found 2"), std::string::npos);
}

TEST(ParsePolytope, ZeroDimension) {
  auto [line, col, msg] = error_of([] { parse_polytope("0 1\n1\n"); });
  EXPECT_EQ(line, 1u);
  EXPECT_NE(msg.find("dimension must be positive"), std::string::npos);
}

TEST(ParsePolytope, WrongArityAndBadToken) {
  auto [l1, c1, m1] = error_of([] { parse_polytope("2 1\n1 0 1 5\n"); });
  EXPECT_EQ(l1, 2u);
  EXPECT_EQ(c1, 7u);
  EXPECT_NE(m1.find("expected 3 integers, found 4"), std::string::npos);
  auto [l2, c2, m2] = error_of([] { parse_polytope("2 1\n1 x 1\n"); });
  EXPECT_EQ(l2, 2u);
  EXPECT_EQ(c2, 3u);
  auto [l3, c3, m3] = error_of([] { parse_polytope("1 1\n1 2\n3 4\n"); });
  EXPECT_EQ(l3, 3u);
  EXPECT_NE(m3.find("unexpected content"), std::string::npos);
}

TEST(ParseParametric, SegmentFamily) {
  ParametricPolytope pp = parse_parametric("1 3 1\n-1 | 0 | 0\n2 | 1 | 6\n1 | 1 | 0\n");
  EXPECT_EQ(pp.A, (IntMatrix{{-1}, {2}, {1}}));
  EXPECT_EQ(pp.E, (IntMatrix{{0}, {1}, {1}}));
  EXPECT_EQ(pp.f, (IntVector{0, 6, 0}));
  EXPECT_TRUE(pp.Q.rows.empty());
  EXPECT_TRUE(pp.in_parameter_space({Rat(-100)}));
}

TEST(ParseParametric, ParameterSpaceBlock) {
  ParametricPolytope pp = parse_parametric(data("rectangle.txt"));
  EXPECT_EQ(pp.num_params(), 2u);
  ASSERT_EQ(pp.Q.rows.size(), 2u);
  EXPECT_FALSE(pp.in_parameter_space({Rat(-1), Rat(0)}));
  EXPECT_EQ(parse_parametric("1 1 1\n1 1 0\nQ:\n").Q.rows.size(), 0u);
  EXPECT_EQ(parse_parametric("1 1 1\n1 1 0\nQ: -1 | 0\n").Q.rows.size(), 1u);
}

TEST(ParseParametric, GroupArityMismatch) {
  auto [line, col, msg] = error_of([] { parse_parametric("1 1 2\n1 | 1 | 0\n"); });
  EXPECT_EQ(line, 2u);
  EXPECT_NE(msg.find("group 2 needs 2 integers, found 1"), std::string::npos);
  auto [l2, c2, m2] = error_of([] { parse_parametric("1 1 0\n1 0\n"); });
  EXPECT_NE(m2.find("number of parameters must be positive"), std::string::npos);
}

TEST(RationalList, ParsesAndRejects) {
  EXPECT_EQ(parse_rational_list("3,1/2,-4"), (RatVector{Rat(3), Rat(1, 2), Rat(-4)}));
  EXPECT_EQ(parse_rational_list(" 6/4 "), (RatVector{Rat(3, 2)}));
  EXPECT_THROW(parse_rational_list("1/0"), ParseError);
  EXPECT_THROW(parse_rational_list("1,,2"), ParseError);
  EXPECT_THROW(parse_rational_list("0.5"), ParseError);
}

TEST(Formatting, RowsAndAffineMaps) {
  EXPECT_EQ(format_row({{-1}, Rat(-6), false}), "-q1 <= -6");
  EXPECT_EQ(format_row({{1}, Rat(6), true}), "q1 < 6");
  EXPECT_EQ(format_row({{2, -1}, Rat(3), true}), "2 q1 - q2 < 3");
  EXPECT_EQ(rat_string(Rat(-3, 4)), "-3/4");
}

TEST(Json, ConeSumAndGenFun) {
  HalfOpenCone c{SimplicialCone::from_rays({Rat(1, 2), Rat(0)}, {{1, 0}, {1, 2}}), {-1, 1}};
  SignedConeSum s{{{-1, c}}};
  nlohmann::json j = to_json(s);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["sign"], -1);
  EXPECT_EQ(j[0]["apex"][0], "1/2");
  EXPECT_EQ(j[0]["sigma"], nlohmann::json::array({-1, 1}));
  GenFun g{{gf_term(c)}};
  nlohmann::json k = to_json(g);
  EXPECT_EQ(k["terms"][0]["numerator"].size(), 2u);
}
