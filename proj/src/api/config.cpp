#include "eudrec/api/config.hpp"

#include <charconv>
#include <cstdlib>
#include <json.hpp>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec::api {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int parse_port(std::string_view text, const std::string& where) {
  int port = -1;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), port);
  if (ec != std::errc{} || end != text.data() + text.size() || port < 0 || port > 65535) {
    throw LoadError(where + ": invalid port '" + std::string(text) + "'");
  }
  return port;
}

}  // namespace

std::optional<std::string> process_env(const char* name) {
  if (const char* value = std::getenv(name)) return std::string(value);
  return std::nullopt;
}

ServiceConfig load_config(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw LoadError(e.what());
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw LoadError(path.string() + ": expected an object");
  }
  const fs::path base = path.parent_path();
  const auto resolve = [&](const json& v) {
    fs::path p = v.get<std::string>();
    return p.is_relative() ? base / p : p;
  };

  ServiceConfig config;
  try {
    if (doc.contains("bind_address")) config.bind_address = doc.at("bind_address").get<std::string>();
    if (doc.contains("port")) {
      const json& port = doc.at("port");
      config.port = port.is_string() ? parse_port(port.get<std::string>(), path.string())
                                     : parse_port(std::to_string(port.get<long long>()), path.string());
    }
    config.data_dir = doc.contains("data_dir") ? resolve(doc.at("data_dir")) : base / config.data_dir;
    if (doc.contains("rules_dir")) config.rules_dir = resolve(doc.at("rules_dir"));
    config.dataset_path =
        doc.contains("dataset_path") ? resolve(doc.at("dataset_path")) : base / config.dataset_path;
    if (doc.contains("policy_path")) config.policy_path = resolve(doc.at("policy_path"));
    config.questionnaires_path = doc.contains("questionnaires_path")
                                     ? resolve(doc.at("questionnaires_path"))
                                     : base / config.questionnaires_path;
    if (doc.contains("cors")) {
      const json& cors = doc.at("cors");
      config.cors_enabled = cors.value("enabled", true);
      config.cors_origin = cors.value("origin", std::string("*"));
    }
    if (doc.contains("thresholds")) config.thresholds = ThresholdTable::from_json(doc.at("thresholds"));
    if (doc.contains("goals")) {
      config.goals = GoalVocabulary(doc.at("goals").get<std::set<std::string>>());
    }
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  return config;
}

void apply_env_overrides(ServiceConfig& config, const EnvLookup& env) {
  if (auto v = env("EUDREC_BIND_ADDRESS")) config.bind_address = *v;
  if (auto v = env("EUDREC_PORT")) config.port = parse_port(*v, "EUDREC_PORT");
  if (auto v = env("EUDREC_DATA_DIR")) config.data_dir = *v;
  if (auto v = env("EUDREC_DATASET")) config.dataset_path = *v;
  if (auto v = env("EUDREC_POLICY")) config.policy_path = *v;
}

}  // namespace eudrec::api
