#include "fuchs/cache.hpp"

#include "fuchs/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fuchs {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& why) { fail(ErrorKind::CacheError, why); }

void check_consistent(const CharacterTable& t) {
  const std::size_t r = t.num_characters();
  if (r != t.num_classes() || t.indicators.size() != r || t.multiplicities.size() != r) bad("table dimensions disagree");
  BigInt sum_sq = 0;
  std::uint64_t class_total = 0;
  for (const auto& c : t.classes) {
    class_total += c.size;
    if (c.inverse >= r || c.square >= r || c.order == 0 || t.exponent % c.order != 0) bad("class summary out of range");
  }
  if (class_total != t.group_order) bad("class sizes do not sum to the group order");
  for (std::size_t i = 0; i < r; ++i) {
    sum_sq += BigInt(t.degrees[i]) * t.degrees[i];
    if (t.indicators[i] < -1 || t.indicators[i] > 1) bad("indicator out of range");
    if (t.multiplicities[i].size() != r) bad("multiplicity rows disagree with the class count");
    for (const auto& vec : t.multiplicities[i]) {
      if (vec.size() != t.exponent) bad("multiplicity vector length differs from the exponent");
      std::uint64_t total = 0;
      for (auto v : vec) total += v;
      if (total != t.degrees[i]) bad("multiplicities do not sum to the degree");
    }
  }
  if (sum_sq != t.group_order) bad("squared degrees do not sum to the group order");
  if (orthogonality_error(t) > 1e-8) bad("loaded table fails orthogonality");
}

}  // namespace

std::string table_to_json(const CharacterTable& t) {
  ordered_json j;
  j["format_version"] = kCacheFormatVersion;
  j["group"] = t.group_spec;
  j["order"] = std::to_string(t.group_order);
  j["exponent"] = t.exponent;
  j["dixon_prime"] = t.dixon_prime;
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes) {
    classes.push_back({{"size", c.size}, {"order", c.order}, {"inverse", c.inverse}, {"square", c.square}, {"rep", c.representative}});
  }
  j["classes"] = std::move(classes);
  j["degrees"] = t.degrees;
  j["indicators"] = t.indicators;
  j["multiplicities"] = t.multiplicities;
  return j.dump();
}

CharacterTable table_from_json(const std::string& text) {
  CharacterTable t;
  try {
    const auto j = ordered_json::parse(text);
    if (j.at("format_version").get<int>() != kCacheFormatVersion) bad("cache format version mismatch");
    t.group_spec = j.at("group").get<std::string>();
    t.group_order = std::stoull(j.at("order").get<std::string>());
    t.exponent = j.at("exponent").get<std::uint32_t>();
    t.dixon_prime = j.at("dixon_prime").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      t.classes.push_back(ClassSummary{c.at("size").get<std::uint64_t>(), c.at("order").get<std::uint32_t>(), c.at("inverse").get<std::uint32_t>(),
                                       c.at("square").get<std::uint32_t>(), c.at("rep").get<std::string>()});
    }
    t.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
    t.indicators = j.at("indicators").get<std::vector<int>>();
    t.multiplicities = j.at("multiplicities").get<std::vector<std::vector<std::vector<std::uint32_t>>>>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("malformed cache entry: ") + e.what());
  }
  check_consistent(t);
  return t;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return std::filesystem::path(*explicit_dir);
  if (const char* env = std::getenv("FUCHSCOUNT_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const GroupSpec& spec) {
  std::string name;
  for (char c : spec.to_string()) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) name += c;
    else if (c == ',') name += '_';
  }
  return dir / (name + ".v" + std::to_string(kCacheFormatVersion) + ".json");
}

TableBundle load_or_compute_table(const GroupSpec& spec, const std::optional<std::filesystem::path>& cache_dir) {
  GroupTable group = standard_group(spec);
  ClassData classes = conjugacy_classes(group);
  if (cache_dir) {
    const auto path = cache_file(*cache_dir, spec);
    if (std::ifstream in{path}) {
      std::stringstream buf;
      buf << in.rdbuf();
      CharacterTable t = table_from_json(buf.str());
      if (t.group_spec != spec.to_string() || t.group_order != group.order() || t.num_classes() != classes.size()) {
        bad("cache entry " + path.string() + " does not match " + spec.to_string());
      }
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (t.classes[i].size != classes.classes[i].size || t.classes[i].order != classes.classes[i].element_order) {
          bad("cache entry " + path.string() + " disagrees on class " + std::to_string(i));
        }
      }
      return TableBundle{std::move(group), std::move(classes), std::move(t), true};
    }
  }
  CharacterTable t = character_table(group, classes);
  if (cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    const auto path = cache_file(*cache_dir, spec);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) bad("cannot write cache file " + tmp);
      out << table_to_json(t);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) bad("cannot install cache file " + path.string() + ": " + ec.message());
  }
  return TableBundle{std::move(group), std::move(classes), std::move(t), false};
}

}  // namespace fuchs
