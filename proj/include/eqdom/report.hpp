#pragma once

// JSON verdict reports shared by the command-line tool and the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqdom/recognition.hpp"

namespace eqdom {

using json = nlohmann::json;

struct report_stats {
  std::uint64_t pair_checks = 0;
  std::uint64_t oracle_nodes = 0;
  double elapsed_ms = 0;
  friend bool operator==(const report_stats&, const report_stats&) = default;
};

struct verdict_report {
  std::string command;
  std::string klass;  // "B", "Cgb", "Tmax" or "extremal-grid"
  bool member = false;
  std::optional<certificate> cert;
  report_stats stats;
  json details = json::object();
  std::vector<std::uint64_t> labels;  // file label of each dense vertex id
  friend bool operator==(const verdict_report&, const verdict_report&) = default;
};

inline std::optional<condition> condition_from_string(std::string_view s) {
  for (auto c : {condition::independent_support, condition::edge_outside_set, condition::pair_witnesses,
                 condition::b_weak_support, condition::b_pair_witnesses, condition::corona_or_c4,
                 condition::degree_bound, condition::reduced_not_bipartite, condition::support_side_conflict})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

inline json certificate_json(const certificate& c) {
  if (auto* w = std::get_if<witness_gamma_set>(&c)) return {{"kind", "witness_gamma_set"}, {"vertices", w->vertices}};
  const auto& v = std::get<violated_condition>(c);
  return {{"kind", "violated_condition"}, {"condition", std::string(to_string(v.which))}, {"offending", v.offending}};
}

inline certificate certificate_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "witness_gamma_set") return witness_gamma_set{j.at("vertices").get<vertex_set>()};
  if (kind != "violated_condition") throw error(errc::parse_error, "unknown certificate kind '" + kind + "'");
  auto which = condition_from_string(j.at("condition").get<std::string>());
  if (!which) throw error(errc::parse_error, "unknown condition '" + j.at("condition").get<std::string>() + "'");
  return violated_condition{*which, j.at("offending").get<vertex_set>()};
}

inline void to_json(json& j, const verdict_report& r) {
  j = json{{"command", r.command},
           {"class", r.klass},
           {"member", r.member},
           {"certificate", r.cert ? certificate_json(*r.cert) : json(nullptr)},
           {"stats",
            {{"pair_checks", r.stats.pair_checks}, {"oracle_nodes", r.stats.oracle_nodes}, {"elapsed_ms", r.stats.elapsed_ms}}},
           {"details", r.details},
           {"labels", r.labels}};
}

inline void from_json(const json& j, verdict_report& r) {
  r.command = j.at("command").get<std::string>();
  r.klass = j.at("class").get<std::string>();
  r.member = j.at("member").get<bool>();
  if (j.at("certificate").is_null()) r.cert.reset();
  else r.cert = certificate_from_json(j.at("certificate"));
  const auto& s = j.at("stats");
  r.stats = {s.at("pair_checks").get<std::uint64_t>(), s.at("oracle_nodes").get<std::uint64_t>(),
             s.at("elapsed_ms").get<double>()};
  r.details = j.at("details");
  r.labels = j.at("labels").get<std::vector<std::uint64_t>>();
}

inline verdict_report report_of(std::string command, std::string klass, const verdict& v) {
  verdict_report r;
  r.command = std::move(command);
  r.klass = std::move(klass);
  r.member = v.member;
  r.cert = v.cert;
  r.stats.pair_checks = v.pair_checks;
  return r;
}

// Checks a parsed report against the fixed schema; returns the first problem.
inline std::optional<std::string> schema_problem(const json& j) {
  if (!j.is_object()) return "report is not an object";
  const std::vector<std::string> keys{"command", "class", "member", "certificate", "stats", "details", "labels"};
  for (const auto& k : keys)
    if (!j.contains(k)) return "missing key '" + k + "'";
  if (j.size() != keys.size()) return "unexpected keys";
  if (!j["command"].is_string()) return "command is not a string";
  static const std::vector<std::string> classes{"B", "Cgb", "Tmax", "extremal-grid"};
  if (!j["class"].is_string() || std::find(classes.begin(), classes.end(), j["class"].get<std::string>()) == classes.end())
    return "class is not one of B, Cgb, Tmax, extremal-grid";
  if (!j["member"].is_boolean()) return "member is not a boolean";
  auto id_list = [](const json& a) {
    if (!a.is_array()) return false;
    for (const auto& x : a)
      if (!x.is_number_unsigned()) return false;
    return true;
  };
  const auto& c = j["certificate"];
  if (!c.is_null()) {
    if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string()) return "certificate has no kind";
    const auto kind = c["kind"].get<std::string>();
    if (kind == "witness_gamma_set") {
      if (c.size() != 2 || !c.contains("vertices") || !id_list(c["vertices"])) return "malformed witness certificate";
    } else if (kind == "violated_condition") {
      if (c.size() != 3 || !c.contains("condition") || !c["condition"].is_string() ||
          !condition_from_string(c["condition"].get<std::string>()) || !c.contains("offending") || !id_list(c["offending"]))
        return "malformed violation certificate";
    } else {
      return "unknown certificate kind";
    }
    if (j["member"].get<bool>() != (kind == "witness_gamma_set")) return "member bit disagrees with certificate";
  }
  const auto& s = j["stats"];
  if (!s.is_object() || s.size() != 3 || !s.contains("pair_checks") || !s["pair_checks"].is_number_unsigned() ||
      !s.contains("oracle_nodes") || !s["oracle_nodes"].is_number_unsigned() || !s.contains("elapsed_ms") ||
      !s["elapsed_ms"].is_number())
    return "malformed stats";
  if (!j["details"].is_object()) return "details is not an object";
  if (!id_list(j["labels"])) return "labels is not a list of non-negative integers";
  return std::nullopt;
}

}  // namespace eqdom
