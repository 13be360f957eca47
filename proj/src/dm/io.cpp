#include "rrk/dm/io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rrk::dm {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

int size_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("channel: missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<double> table(const json& j, const char* what) {
  if (!j.contains("p") || !j["p"].is_array())
    throw std::invalid_argument(std::string(what) + ": missing array 'p'");
  std::vector<double> p;
  for (const auto& v : j["p"]) {
    if (!v.is_number()) throw std::invalid_argument(std::string(what) + ": non-numeric entry");
    p.push_back(v.get<double>());
  }
  return p;
}

}  // namespace

DmChannel channel_from_json(const std::string& text) {
  json j = parse(text, "channel");
  DmChannel ch{size_field(j, "X1"), size_field(j, "X2"), size_field(j, "Y1"),
               size_field(j, "Y2"), table(j, "channel")};
  ch.validate();
  return ch;
}

std::string channel_to_json(const DmChannel& ch) {
  json j{{"X1", ch.nx1}, {"X2", ch.nx2}, {"Y1", ch.ny1}, {"Y2", ch.ny2}, {"p", ch.p}};
  return j.dump(2) + "\n";
}

JointDistribution distribution_from_json(const std::string& text) {
  json j = parse(text, "distribution");
  if (!j.contains("roles") || !j["roles"].is_array())
    throw std::invalid_argument("distribution: missing array 'roles'");
  JointDistribution d;
  for (const auto& r : j["roles"]) {
    if (!r.contains("name") || !r.contains("size"))
      throw std::invalid_argument("distribution: role entries need 'name' and 'size'");
    auto role = parse_role(r["name"].get<std::string>());
    if (!role) throw std::invalid_argument("distribution: unknown role '" +
                                           r["name"].get<std::string>() + "'");
    d.roles.push_back(*role);
    d.sizes.push_back(r["size"].get<int>());
  }
  d.p = table(j, "distribution");
  d.validate();
  return d;
}

std::string distribution_to_json(const JointDistribution& d) {
  json roles = json::array();
  for (std::size_t i = 0; i < d.roles.size(); ++i)
    roles.push_back({{"name", role_name(d.roles[i])}, {"size", d.sizes[i]}});
  json j{{"roles", roles}, {"p", d.p}};
  return j.dump(2) + "\n";
}

}  // namespace rrk::dm
