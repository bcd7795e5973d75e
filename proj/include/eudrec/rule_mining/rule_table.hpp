#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eudrec/rule_mining/apriori.hpp"

namespace eudrec {

struct MiningOptions {
  double min_support = 0.01;
  double min_confidence = 0.1;
  std::size_t examples_per_pair = 3;
};

/// The published result of a mining run: rules plus example rule records for
/// every (trigger_category, action_category) pair seen in the dataset.
struct RuleTable {
  static constexpr const char* kFileName = "rules.json";

  MiningOptions options;
  std::size_t transaction_count = 0;
  std::size_t itemset_count = 0;
  std::size_t skipped_rows = 0;
  std::vector<AssociationRule> rules;
  /// (trigger_category, action_category) -> first N records in dataset order.
  std::map<std::pair<std::string, std::string>, std::vector<RuleRecord>> examples;

  std::string to_json_text() const;
  static RuleTable from_json_text(std::string_view text);

  /// Writes `<dir>/rules.json` atomically, creating `dir`.
  void save(const std::filesystem::path& dir) const;
  /// Throws IoError if the file is missing or unreadable.
  static RuleTable load(const std::filesystem::path& dir);
};

/// Ingest, apriori, generate_rules and example sampling in one pass.
RuleTable mine(const IngestResult& dataset, const MiningOptions& options);
RuleTable mine_file(const std::filesystem::path& dataset, const MiningOptions& options);

}  // namespace eudrec
