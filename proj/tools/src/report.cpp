#include "hunters/cli/report.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hunters::cli {

Json Report::to_json() const {
  Json doc = Json::object();
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["inputs_digest"] = inputs_digest;
  doc["results"] = results;
  doc["warnings"] = warnings;
  if (elapsed_ms) doc["timing"] = {{"elapsed_ms", *elapsed_ms}};
  return doc;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string join(const Json& arr) {
  std::string s;
  for (const auto& e : arr) {
    if (!s.empty()) s += ' ';
    s += scalar(e);
  }
  return s;
}

void render(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        os << pad << key << ":\n";
        render(os, value, depth + 1);
      } else if (value.is_array()) {
        os << pad << key << ':' << (value.empty() ? "" : " ") << join(value) << '\n';
      } else {
        os << pad << key << ": " << scalar(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_scalar_array(e)) {
        os << pad << "- " << join(e) << '\n';
      } else if (e.is_structured()) {
        os << pad << "-\n";
        render(os, e, depth + 1);
      } else {
        os << pad << "- " << scalar(e) << '\n';
      }
    }
  }
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  render(os, to_json(), 0);
  return os.str();
}

std::string digest(const std::vector<std::string>& blobs) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const auto& b : blobs) {
    for (auto t = b.size(), i = std::size_t{0}; i < 8; ++i, t >>= 8) feed(static_cast<unsigned char>(t & 0xff));
    for (unsigned char c : b) feed(c);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json big(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return value.convert_to<long long>();
  return value.str();
}

std::string_view match_flag(bool equal) { return equal ? "MATCH" : "MISMATCH"; }

}  // namespace hunters::cli
