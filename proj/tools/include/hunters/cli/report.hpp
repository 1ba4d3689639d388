#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hunters/cube.hpp"

namespace hunters::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

struct Report {
  std::vector<std::string> command;
  std::string inputs_digest;
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::optional<double> elapsed_ms;

  Json to_json() const;
  /// Same fields as to_json, one "key: value" line each.
  std::string render_text() const;
};

/// FNV-1a 64 over the blobs, each prefixed by its length; "fnv1a64:<hex>".
std::string digest(const std::vector<std::string>& blobs);

/// Number if it fits in 64 bits, decimal string otherwise.
Json big(const BigInt& value);

std::string_view match_flag(bool equal);

}  // namespace hunters::cli
