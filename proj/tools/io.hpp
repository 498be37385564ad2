#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sqw/grid.hpp"
#include "sqw/partition.hpp"
#include "sqw/poly.hpp"
#include "sqw/rational.hpp"
#include "sqw/suite.hpp"

namespace sqw::cli {

using Json = nlohmann::ordered_json;

// "2,1" or "(2,1)" or "" -> partition. Throws Errc::ParseError.
Partition parse_partition(std::string_view text);
// "1/2,-3" -> rationals
std::vector<Rational> parse_rationals(std::string_view text);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Partition& p);
Json to_json(const SymPoly& p);
Json to_json(const Grid& g);
Json to_json(const GridTag& t);
Json to_json(const Classification& c);
Json to_json(const CriterionResult& r, bool timing);

// {n, depth, values: [["p/q", ...], ...], tag?}
Grid grid_from_json(const Json& j);

// Parameter file: exact rationals as strings.
// {"A": [...], "B": [...], "q": "p/q", "C": [...], "d": "p/q"}; A, B, C are 0-indexed.
struct ParamFile {
  std::optional<std::vector<Rational>> A, B, C;
  std::optional<Rational> q, d;
};
ParamFile params_from_json(const Json& j);

Json read_json_file(const std::string& path);

// One "path,value" row per scalar leaf.
std::string to_csv(const Json& j);
// Indented "key: value" lines.
std::string to_pretty(const Json& j);

}  // namespace sqw::cli
