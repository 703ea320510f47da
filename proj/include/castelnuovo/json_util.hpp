#pragma once

#include <castelnuovo/integer.hpp>
#include <castelnuovo/point.hpp>

#include <json.hpp>

#include <vector>

namespace castelnuovo {

/// Integers that fit in int64 are JSON numbers; larger ones are decimal strings.
nlohmann::json integer_to_json(const Integer& v);
/// Accepts JSON integers or decimal strings. Throws ParseError otherwise.
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json integers_to_json(const std::vector<Integer>& v);
std::vector<Integer> integers_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const LatticePoint& p);
LatticePoint point_from_json(const nlohmann::json& j);

}  // namespace castelnuovo
