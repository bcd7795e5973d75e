#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "eudrec/psychometrics/thresholds.hpp"
#include "eudrec/user_model/profile.hpp"

namespace eudrec::api {

/// Service configuration. Relative paths in a config file resolve against
/// the file's directory; defaults resolve against the working directory.
struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path data_dir = "eudrec-data";
  std::filesystem::path rules_dir;  // empty: <data_dir>/rules
  std::filesystem::path dataset_path = "data/sample_rules.csv";
  std::filesystem::path policy_path;  // empty: built-in default policy
  std::filesystem::path questionnaires_path = "data/questionnaires.json";
  bool cors_enabled = true;
  std::string cors_origin = "*";
  ThresholdTable thresholds = ThresholdTable::defaults();
  GoalVocabulary goals = GoalVocabulary::defaults();

  std::filesystem::path effective_rules_dir() const {
    return rules_dir.empty() ? data_dir / "rules" : rules_dir;
  }
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

/// Reads the process environment.
std::optional<std::string> process_env(const char* name);

// JSON config file:
//   {"bind_address": "127.0.0.1", "port": 8080, "data_dir": "...",
//    "rules_dir": "...", "dataset_path": "...", "policy_path": "...",
//    "questionnaires_path": "...", "cors": {"enabled": true, "origin": "*"},
//    "thresholds": {...}, "goals": ["energy_saving", ...]}
// Every key is optional. Throws LoadError.
ServiceConfig load_config(const std::filesystem::path& path);

/// EUDREC_BIND_ADDRESS, EUDREC_PORT, EUDREC_DATA_DIR, EUDREC_DATASET,
/// EUDREC_POLICY override the corresponding fields. Throws LoadError on a
/// malformed port.
void apply_env_overrides(ServiceConfig& config, const EnvLookup& env = process_env);

}  // namespace eudrec::api
