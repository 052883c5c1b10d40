#include "fuchs/lie_data.hpp"

#include "fuchs/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace fuchs {

namespace detail {
extern const char* const kLieTablesJson;
}

namespace {

using nlohmann::json;

const json& tables() {
  static const json data = json::parse(detail::kLieTablesJson);
  return data;
}

const json& type_entry(const char* section, std::string_view type) {
  const auto& sec = tables().at(section);
  const auto it = sec.find(std::string(type));
  if (it == sec.end()) fail(ErrorKind::UnknownLabel, "type '" + std::string(type) + "' not in stored " + section + " table");
  return *it;
}

}  // namespace

std::string_view lie_tables_text() { return detail::kLieTablesJson; }

std::string data_version() { return tables().at("data_version").get<std::string>(); }

std::vector<StoredAlpha> alpha_table(std::string_view type) {
  std::vector<StoredAlpha> out;
  for (const auto& row : type_entry("alpha", type)) {
    out.push_back({row.at("label").get<std::string>(), parse_rational(row.at("value").get<std::string>()), row.at("kind").get<std::string>()});
  }
  return out;
}

StoredAlpha alpha_exceptional(std::string_view type, std::string_view label) {
  for (auto& row : alpha_table(type)) {
    if (row.label == label) return row;
  }
  fail(ErrorKind::UnknownLabel, "no stored alpha for Levi '" + std::string(label) + "' in " + std::string(type));
}

bool is_exceptional_type(std::string_view type) { return tables().at("coxeter").contains(std::string(type)); }

std::int64_t exceptional_jm_lower(std::string_view type, std::uint64_t m) {
  const auto value = type_entry("jm_lower", type).get<std::int64_t>();
  if (m < 7 || gcd_u64(m, 30) != 1) fail(ErrorKind::OutOfRange, "m = " + std::to_string(m) + " must be >= 7 and coprime to 30");
  return value;
}

int coxeter_number(std::string_view type) { return type_entry("coxeter", type).get<int>(); }

std::int64_t exceptional_dimension(std::string_view type) { return type_entry("dimension", type).get<std::int64_t>(); }

std::vector<std::uint64_t> bad_primes(std::string_view type) {
  const auto& sec = tables().at("bad_primes");
  const std::string key = sec.contains(std::string(type)) ? std::string(type) : std::string(type.substr(0, 1));
  if (!sec.contains(key)) fail(ErrorKind::UnknownLabel, "no bad-prime data for type '" + std::string(type) + "'");
  return sec.at(key).get<std::vector<std::uint64_t>>();
}

int delta_max(std::string_view type, const std::vector<std::uint64_t>& periods) {
  std::vector<std::uint64_t> sorted = periods;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& row : tables().at("delta").at("rows")) {
    if (row.at("type").get<std::string>() != type) continue;
    const auto& pat = row.at("periods");
    if (pat.size() != sorted.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < sorted.size() && match; ++i) {
      match = pat[i].is_string() ? sorted[i] > 7 : sorted[i] == pat[i].get<std::uint64_t>();
    }
    if (match) return row.at("max").get<int>();
  }
  return 0;
}

}  // namespace fuchs
