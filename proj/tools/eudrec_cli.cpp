// eudrec: mine rule tables, serve the API, seed demo users, export
// similarity matrices.
//
// Exit codes: 0 success, 2 usage error, 1 runtime error.

#include <pthread.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "eudrec/api/config.hpp"
#include "eudrec/api/service.hpp"
#include "eudrec/error.hpp"
#include "eudrec/rule_mining/rule_table.hpp"
#include "eudrec/similarity/testbed.hpp"
#include "eudrec/text.hpp"
#include "eudrec/user_model/document_store.hpp"
#include "eudrec/user_model/repository.hpp"

namespace fs = std::filesystem;
using namespace eudrec;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct ConfigFlags {
  std::string config_path;
  std::string data_dir;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "Service config file (JSON)")->check(CLI::ExistingFile);
    cmd.add_option("--data-dir", data_dir, "Data directory (user store and rules/)");
  }

  api::ServiceConfig resolve() const {
    api::ServiceConfig config = config_path.empty() ? api::ServiceConfig{} : api::load_config(config_path);
    api::apply_env_overrides(config);
    if (!data_dir.empty()) config.data_dir = data_dir;
    return config;
  }
};

// min_support and min_confidence live in (0, 1].
const CLI::Validator kUnitInterval(
    [](std::string& text) -> std::string {
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        if (used != text.size()) return "not a number: " + text;
      } catch (const std::exception&) {
        return "not a number: " + text;
      }
      if (!(v > 0.0 && v <= 1.0)) return "must be in (0, 1], got " + text;
      return {};
    },
    "(0,1]");

int run_mine(const std::string& dataset, const MiningOptions& options, const std::string& out,
             const ConfigFlags& flags) {
  const api::ServiceConfig config = flags.resolve();
  const fs::path dataset_path = dataset.empty() ? config.dataset_path : fs::path(dataset);
  const fs::path out_dir = out.empty() ? config.effective_rules_dir() : fs::path(out);

  const IngestResult ingest = ingest_dataset_file(dataset_path);
  for (const auto& row : ingest.skipped) {
    spdlog::warn("{}:{}: skipped row: {}", dataset_path.string(), row.line, row.reason);
  }
  const RuleTable table = mine(ingest, options);
  table.save(out_dir);

  std::printf("transactions: %zu\n", table.transaction_count);
  std::printf("frequent itemsets: %zu\n", table.itemset_count);
  std::printf("rules: %zu\n", table.rules.size());
  std::printf("skipped rows: %zu\n", table.skipped_rows);
  std::printf("written: %s\n", (out_dir / RuleTable::kFileName).string().c_str());
  return 0;
}

int run_serve(const ConfigFlags& flags) {
  const api::ServiceConfig config = flags.resolve();
  auto service = api::ApiService::create(config);
  if (!service->recommender().published()) {
    spdlog::warn("no rule table under {}; recommendations answer 503 until `eudrec mine` runs",
                 config.effective_rules_dir().string());
  }

  // Signals are taken synchronously on this thread; block them before the
  // server spawns its workers so those inherit the mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigaddset(&signals, SIGHUP);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  api::ServiceHost host(*service);
  const int port = host.bind(config.bind_address, config.port);
  spdlog::info("listening on {}:{}", config.bind_address, port);
  std::thread server([&host] { host.run(); });

  for (;;) {
    int sig = 0;
    if (sigwait(&signals, &sig) != 0) continue;
    if (sig == SIGHUP) {
      try {
        const bool published = service->reload();
        spdlog::info("reloaded policy and rules (rules published: {})", published);
      } catch (const std::exception& e) {
        spdlog::error("reload failed, keeping previous state: {}", e.what());
      }
      continue;
    }
    spdlog::info("shutting down");
    break;
  }
  host.stop();
  server.join();
  service->users().flush();
  return 0;
}

int run_seed_demo(const ConfigFlags& flags) {
  const api::ServiceConfig config = flags.resolve();
  UserRepository users(std::make_shared<FileStore>(config.data_dir), config.goals);

  UserProfile fresh;
  fresh.username = "Donald.Duck";
  UserProfile profile = users.find_profile(fresh.username).value_or(fresh);
  const std::pair<Trait, double> values[] = {{Trait::locus_of_control, 1.8},
                                             {Trait::need_for_cognition, 3.0},
                                             {Trait::self_efficacy, 3.0}};
  for (const auto& [trait, value] : values) {
    const TraitThresholds t = users.thresholds_for(trait, config.thresholds);
    profile.trait_scores[trait] = TraitScore{trait, value, classify(value, t)};
  }
  users.upsert_profile(profile);
  users.flush();
  std::printf("seeded Donald.Duck in %s\n", config.data_dir.string().c_str());
  return 0;
}

int run_similarity_matrix(const std::string& measure_token, const std::string& features,
                          const std::string& out, const ConfigFlags& flags) {
  const auto measure = parse_measure(measure_token);
  if (!measure) throw CLI::ValidationError("--measure", "unknown measure " + measure_token);
  const api::ServiceConfig config = flags.resolve();
  UserRepository users(std::make_shared<FileStore>(config.data_dir), config.goals);
  const std::string csv = to_csv(similarity_matrix(users, *measure, features));
  if (out == "-") {
    std::cout << csv;
  } else {
    write_file_atomic(out, csv);
  }
  return 0;
}

int run_recommend(const std::string& direction, const std::string& category, std::size_t k,
                  const std::string& rules_dir, const ConfigFlags& flags) {
  const fs::path dir = rules_dir.empty() ? flags.resolve().effective_rules_dir() : fs::path(rules_dir);
  Recommender recommender;
  recommender.publish(RuleTable::load(dir));
  const Direction d =
      direction == "actions" ? Direction::action_given_trigger : Direction::trigger_given_action;
  for (const auto& rec : recommender.recommend(d, category, k)) {
    std::printf("%s\t%.12g\t%.12g\n", rec.category.c_str(), rec.confidence, rec.support);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_logger_mt("eudrec");
  logger->set_pattern("%Y-%m-%dT%H:%M:%S.%e %^%l%$ %v");
  spdlog::set_default_logger(logger);

  CLI::App app{"Trigger-action rule recommendations tailored to personality traits"};
  app.require_subcommand(1);

  ConfigFlags mine_flags;
  std::string dataset;
  std::string mine_out;
  MiningOptions options;
  auto* mine_cmd = app.add_subcommand("mine", "Mine a rule table from a trigger-action dataset");
  mine_cmd->add_option("--dataset", dataset, "Dataset CSV (default: from config)");
  mine_cmd->add_option("--min-support", options.min_support, "Minimum itemset support")
      ->check(kUnitInterval)
      ->capture_default_str();
  mine_cmd->add_option("--min-confidence", options.min_confidence, "Minimum rule confidence")
      ->check(kUnitInterval)
      ->capture_default_str();
  mine_cmd->add_option("--examples", options.examples_per_pair, "Example rules kept per pair")
      ->capture_default_str();
  mine_cmd->add_option("--out", mine_out, "Output directory (default: <data_dir>/rules)");
  mine_flags.add_to(*mine_cmd);

  ConfigFlags serve_flags;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_flags.add_to(*serve_cmd);

  ConfigFlags seed_flags;
  auto* seed_cmd = app.add_subcommand("seed-demo", "Create the Donald.Duck demo profile");
  seed_flags.add_to(*seed_cmd);

  ConfigFlags matrix_flags;
  std::string measure;
  std::string features;
  std::string matrix_out;
  auto* matrix_cmd = app.add_subcommand("similarity-matrix", "Pairwise similarity of all users as CSV");
  matrix_cmd->add_option("--measure", measure, "jaccard, simple_matching, cosine or pearson")
      ->required()
      ->check(CLI::IsMember({"jaccard", "simple_matching", "cosine", "pearson"}));
  matrix_cmd->add_option("--features", features, "Comma-separated features, e.g. object:*,trait:*")
      ->required();
  matrix_cmd->add_option("--out", matrix_out, "Output CSV ('-' for stdout)")->required();
  matrix_flags.add_to(*matrix_cmd);

  ConfigFlags rec_flags;
  std::string direction;
  std::string category;
  std::size_t k = 5;
  std::string rules_dir;
  auto* rec_cmd = app.add_subcommand("recommend", "Print ranked recommendations as TSV");
  rec_cmd->add_option("--direction", direction, "actions or triggers")
      ->required()
      ->check(CLI::IsMember({"actions", "triggers"}));
  rec_cmd->add_option("--category", category, "Input category")->required();
  rec_cmd->add_option("--k", k, "How many")->check(CLI::PositiveNumber)->capture_default_str();
  rec_cmd->add_option("--rules-dir", rules_dir, "Directory holding rules.json");
  rec_flags.add_to(*rec_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mine_cmd) return run_mine(dataset, options, mine_out, mine_flags);
    if (*serve_cmd) return run_serve(serve_flags);
    if (*seed_cmd) return run_seed_demo(seed_flags);
    if (*matrix_cmd) return run_similarity_matrix(measure, features, matrix_out, matrix_flags);
    if (*rec_cmd) return run_recommend(direction, category, k, rules_dir, rec_flags);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
