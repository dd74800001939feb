#pragma once

// Plain-text problem files and JSON dumps.
//
// Polytope file:    "d m", then m rows "a_1 ... a_d b" meaning a.x <= b.
// Parametric file:  "d m p", then m rows "a_1 ... a_d | e_1 ... e_p | f"
//                   meaning a.x <= e.q + f, then optionally a line "Q:"
//                   followed by rows "g_1 ... g_p | h" meaning g.q <= h.
// '|' is optional; '#' starts a comment; blank lines are ignored. All
// entries are integers.

#include <string>
#include <string_view>

#include <json.hpp>

#include "latcount/parametric.hpp"

namespace latcount {

/// Throws ParseError with the line and column of the offending token.
HPolytope parse_polytope(std::string_view text);
ParametricPolytope parse_parametric(std::string_view text);

/// "3,1/2,-4" -> (3, 1/2, -4).
RatVector parse_rational_list(std::string_view text);

std::string rat_string(const Rat& x);

nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const RatVector& v);
nlohmann::json to_json(const SignedConeSum& sum);
nlohmann::json to_json(const GenFun& g);
nlohmann::json to_json(const HalfOpenPolyhedron& region);
/// [{region, vertices: [{M, c, basis}]}]
nlohmann::json chambers_json(const std::vector<Chamber>& chambers,
                             const std::vector<ParametricVertex>& vertices);

/// "2 q1 - q2 < 3"
std::string format_row(const HalfOpenPolyhedron::Row& row, const std::string& var = "q");
/// "(q1/2 + 3, q2)"
std::string format_affine(const RatMatrix& M, const RatVector& c, const std::string& var = "q");

}  // namespace latcount
