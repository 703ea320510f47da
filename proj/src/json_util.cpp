#include <castelnuovo/errors.hpp>
#include <castelnuovo/json_util.hpp>

namespace castelnuovo {

nlohmann::json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  return nlohmann::json(v.get_str());
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer v;
    const auto s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("'" + s + "' is not an integer");
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

nlohmann::json integers_to_json(const std::vector<Integer>& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integers_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

nlohmann::json point_to_json(const LatticePoint& p) { return integers_to_json(p.coords()); }

LatticePoint point_from_json(const nlohmann::json& j) { return LatticePoint(integers_from_json(j)); }

}  // namespace castelnuovo
