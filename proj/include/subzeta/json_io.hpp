#pragma once

#include "subzeta/algebras.hpp"
#include "subzeta/formulas.hpp"
#include "subzeta/ratfun.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace subzeta {

using Json = nlohmann::json;

// {"num": [[c_num, c_den, dq, dt], ...], "den": [...]}; integers beyond 64 bits are strings.
Json to_json(const RatFun2& f);
// Same layout with dq = 0 and the variable in the dt slot.
Json to_json(const RatFun1& f);
// Exact rationals as "a/b" strings, integers as numbers when they fit.
Json rational_json(const mpq_class& x);
// Throws ParseError.
RatFun2 ratfun_from_json(const Json& j);

Json to_json(const FEShape& s);
// "sign,qexp,texp"; throws ParseError.
FEShape parse_fe_shape(const std::string& s);

// {"algebra", "p", "counts": [[k, a_k], ...]}
Json counts_json(const std::string& algebra, long p, const std::vector<std::uint64_t>& counts);

// {"name"?, "rank", "labels"?, "brackets"?: [[i, j, [[k, c], ...]], ...],
//  "generators"?: "adjoint" | [[k...]] | [matrix...], "grading"?} with 1-based indices.
// Throws ParseError, InvalidAlgebraError or GradingError.
EndoSetup endo_setup_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace subzeta
