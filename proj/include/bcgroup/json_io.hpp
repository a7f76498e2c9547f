#pragma once

// Interchange formats for group elements and configurations:
//   PoolUpdate:    {"n": int, "r": int, "perms": [[int,...],...]}
//   Configuration: {"n": int, "r": int, "pools": [int,...]}
// Keys are written in that order. Readers raise GroupError (MalformedInput
// for shape problems, NotABijection for a bad permutation).

#include <string>
#include <string_view>

#include "json.hpp"

#include "bcgroup/core.hpp"

namespace bcgroup {

using Json = nlohmann::ordered_json;

Json to_json(const PoolUpdate& a);
Json to_json(const Configuration& cfg);
Json to_json(const Permutation& p);

PoolUpdate pool_update_from_json(const Json& j);
Configuration configuration_from_json(const Json& j);

PoolUpdate parse_pool_update(std::string_view text);
Configuration parse_configuration(std::string_view text);

/// Reads a required non-negative integer field; MalformedInput otherwise.
std::uint64_t require_uint(const Json& j, const char* key);
GroupParams params_from_json(const Json& j);

}  // namespace bcgroup
