#include "bcgroup/json_io.hpp"

#include <limits>

namespace bcgroup {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorKind::MalformedInput, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::MalformedInput, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::int64_t> int_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::MalformedInput, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      fail(ErrorKind::MalformedInput, std::string(what) + " must contain integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::MalformedInput, e.what());
  }
}

}  // namespace

std::uint64_t require_uint(const Json& j, const char* key) {
  const auto& v = require_field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    fail(ErrorKind::MalformedInput, std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

GroupParams params_from_json(const Json& j) {
  const auto n = require_uint(j, "n");
  const auto r = require_uint(j, "r");
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (n < 1 || r < 1 || n > kMax || r > kMax) {
    fail(ErrorKind::MalformedInput, "n and r must be in [1, 2^32)");
  }
  return GroupParams(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r));
}

Json to_json(const Permutation& p) {
  Json out = Json::array();
  for (auto v : p.mapping()) out.push_back(v);
  return out;
}

Json to_json(const PoolUpdate& a) {
  Json out;
  out["n"] = a.params().node_count();
  out["r"] = a.params().pool_count();
  Json perms = Json::array();
  for (const auto& p : a.per_node()) perms.push_back(to_json(p));
  out["perms"] = std::move(perms);
  return out;
}

Json to_json(const Configuration& cfg) {
  Json out;
  out["n"] = cfg.params().node_count();
  out["r"] = cfg.params().pool_count();
  out["pools"] = cfg.assignment();
  return out;
}

PoolUpdate pool_update_from_json(const Json& j) {
  const auto params = params_from_json(j);
  const auto& perms = require_field(j, "perms");
  if (!perms.is_array() || perms.size() != params.node_count()) {
    fail(ErrorKind::MalformedInput, "\"perms\" must be an array of length n");
  }
  std::vector<PoolPermutation> per_node;
  per_node.reserve(perms.size());
  for (const auto& p : perms) {
    auto mapping = int_array(p, "permutation");
    if (mapping.size() != params.pool_count()) {
      fail(ErrorKind::MalformedInput, "each permutation must have length r");
    }
    per_node.push_back(make_pool_permutation(mapping));
  }
  return PoolUpdate(params, std::move(per_node));
}

Configuration configuration_from_json(const Json& j) {
  const auto params = params_from_json(j);
  auto pools = int_array(require_field(j, "pools"), "\"pools\"");
  if (pools.size() != params.node_count()) {
    fail(ErrorKind::MalformedInput, "\"pools\" must have length n");
  }
  std::vector<Index> assignment;
  assignment.reserve(pools.size());
  for (auto v : pools) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= params.pool_count()) {
      fail(ErrorKind::MalformedInput, "pool index " + std::to_string(v) + " out of range");
    }
    assignment.push_back(static_cast<Index>(v));
  }
  return Configuration(params, std::move(assignment));
}

PoolUpdate parse_pool_update(std::string_view text) {
  return pool_update_from_json(parse_text(text));
}

Configuration parse_configuration(std::string_view text) {
  return configuration_from_json(parse_text(text));
}

}  // namespace bcgroup
