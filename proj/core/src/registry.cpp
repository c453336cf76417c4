#include "fic/registry.hpp"

#include "fic_embedded_data.hpp"
#include "nlohmann/json.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fic {

namespace {

uint64_t fnv1a(std::string_view text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

Registry parse_registry(const nlohmann::json& doc) {
  if (doc.value("schema", "") != "fic-registry/1") {
    throw std::invalid_argument("registry schema must be fic-registry/1");
  }
  Registry reg;
  for (const auto& row : doc.at("threefolds")) {
    std::string name = row.at("name").get<std::string>();
    int index = row.at("index").get<int>();
    std::optional<int> genus;
    long long degree = 0;
    if (row.contains("genus")) {
      genus = row.at("genus").get<int>();
      degree = 2LL * *genus - 2;
    }
    if (row.contains("degree")) degree = row.at("degree").get<long long>();
    reg.threefolds.push_back(make_fano(std::move(name), index, degree, genus));
  }
  if (reg.threefolds.empty()) {
    throw std::invalid_argument("registry has no threefolds");
  }
  return reg;
}

}  // namespace

const FanoData& Registry::by_name(std::string_view name) const {
  for (const auto& X : threefolds) {
    if (X.name == name) return X;
  }
  std::string known;
  for (const auto& X : threefolds) {
    if (!known.empty()) known += ", ";
    known += X.name;
  }
  throw std::invalid_argument("unknown threefold '" + std::string(name) +
                              "'; registry has: " + known);
}

bool Registry::has(std::string_view name) const {
  for (const auto& X : threefolds) {
    if (X.name == name) return true;
  }
  return false;
}

Registry Registry::builtin() {
  return from_json_text(embedded::kThreefoldsJson);
}

Registry Registry::from_json_text(std::string_view text) {
  return parse_registry(nlohmann::json::parse(text));
}

Registry Registry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string registry_hash(const Registry& reg) {
  std::string canon;
  for (const auto& X : reg.threefolds) {
    canon += X.name;
    canon += '|';
    canon += std::to_string(X.index);
    canon += '|';
    canon += std::to_string(X.degree);
    canon += '|';
    canon += X.genus ? std::to_string(*X.genus) : std::string("-");
    canon += '\n';
  }
  uint64_t h = fnv1a(canon);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace fic
