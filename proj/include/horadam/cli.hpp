#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "horadam/derivation.hpp"
#include "horadam/identities.hpp"
#include "horadam/matrix.hpp"
#include "horadam/sequences.hpp"

namespace horadam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the registry file when --registry is absent.
inline constexpr const char* kRegistryEnv = "HORADAM_REGISTRY";

using Json = nlohmann::ordered_json;

struct RegistryEntry {
  std::string name;
  RecurrenceParams params;
  bool builtin = false;
};

/**
 * Named sequences. Built-ins (fibonacci, pell, jacobsthal, balancing) are
 * always present; entries loaded from a registry file are merged over them,
 * and a user entry replaces a built-in of the same name. Lookup ignores case.
 *
 * File format: a JSON array of {"name", "a", "b", "r", "s"} objects whose
 * numeric fields are fraction strings.
 */
class Registry {
 public:
  Registry();

  /// Merges entries from `path`; a missing file is an empty registry.
  void load(const std::string& path);
  /// Writes the non-built-in entries to `path`.
  void save(const std::string& path) const;

  void add(RegistryEntry entry);
  const RegistryEntry* find(std::string_view name) const;
  const std::vector<RegistryEntry>& entries() const { return entries_; }

  static std::vector<RegistryEntry> parse(const Json& doc);

 private:
  std::vector<RegistryEntry> entries_;
};

// Output record helpers. Every number is emitted as exact text.
Json params_json(const RecurrenceParams& p);
template <class M>
Json matrix_json(const M& m) {
  return Json(m.to_strings());
}
Json report_json(const IdentityReport& rep);
std::string csv_escape(const std::string& field);

/// Runs one CLI invocation; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli
