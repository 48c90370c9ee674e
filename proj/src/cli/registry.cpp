#include <algorithm>
#include <cctype>
#include <fstream>

#include "horadam/cli.hpp"
#include "horadam/errors.hpp"

namespace horadam::cli {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

Rational field(const Json& obj, const char* key, const char* fallback) {
  if (!obj.contains(key)) return Rational::parse(fallback);
  const auto& v = obj.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(std::string("registry field '") + key + "' must be a fraction string");
}

}  // namespace

Registry::Registry() {
  entries_ = {
      {"fibonacci", RecurrenceParams::generalized(1, 1), true},
      {"pell", RecurrenceParams::generalized(2, 1), true},
      {"jacobsthal", RecurrenceParams::generalized(1, 2), true},
      {"balancing", RecurrenceParams::generalized(6, -1), true},
  };
}

std::vector<RegistryEntry> Registry::parse(const Json& doc) {
  if (!doc.is_array()) throw ParseError("registry document must be a JSON array");
  std::vector<RegistryEntry> out;
  for (const auto& obj : doc) {
    if (!obj.is_object() || !obj.contains("name") || !obj.at("name").is_string()) {
      throw ParseError("registry entries need a string 'name'");
    }
    RegistryEntry e;
    e.name = obj.at("name").get<std::string>();
    if (e.name.empty()) throw ParseError("registry names must be nonempty");
    e.params = {field(obj, "a", "0"), field(obj, "b", "1"), field(obj, "r", "1"), field(obj, "s", "1")};
    out.push_back(std::move(e));
  }
  return out;
}

void Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("registry file " + path + ": " + e.what());
  }
  for (auto& e : parse(doc)) add(std::move(e));
}

void Registry::save(const std::string& path) const {
  Json doc = Json::array();
  for (const auto& e : entries_) {
    if (e.builtin) continue;
    Json obj = {{"name", e.name}};
    obj.update(params_json(e.params));
    doc.push_back(std::move(obj));
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write registry file " + path);
  out << doc.dump(2) << '\n';
}

void Registry::add(RegistryEntry entry) {
  auto key = lower(entry.name);
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const RegistryEntry& e) { return lower(e.name) == key; });
  if (it != entries_.end()) {
    *it = std::move(entry);
  } else {
    entries_.push_back(std::move(entry));
  }
}

const RegistryEntry* Registry::find(std::string_view name) const {
  auto key = lower(name);
  for (const auto& e : entries_) {
    if (lower(e.name) == key) return &e;
  }
  return nullptr;
}

}  // namespace horadam::cli
