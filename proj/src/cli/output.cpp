#include "horadam/cli.hpp"

namespace horadam::cli {

Json params_json(const RecurrenceParams& p) {
  return {{"a", p.a.str()}, {"b", p.b.str()}, {"r", p.r.str()}, {"s", p.s.str()}};
}

Json report_json(const IdentityReport& rep) {
  Json j = {
      {"identity", rep.identity},
      {"params", {{"r", rep.r.str()}, {"s", rep.s.str()}}},
      {"range", {rep.lo, rep.hi}},
      {"status", to_string(rep.status)},
  };
  if (rep.first_failure) {
    j["first_failure"] = {{"index", rep.first_failure->index},
                          {"lhs", rep.first_failure->lhs},
                          {"rhs", rep.first_failure->rhs}};
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace horadam::cli
