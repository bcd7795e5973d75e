#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace eudrec {

/// One trigger-action rule from the dataset, categories lower_snake_case.
struct RuleRecord {
  std::string trigger_category;
  std::string trigger_event;
  std::string action_category;
  std::string action_event;
  std::string description;

  bool operator==(const RuleRecord&) const = default;
};

/// Items are direction-namespaced: "t:<category>" or "a:<category>".
/// Stored sorted and duplicate-free.
struct Transaction {
  std::vector<std::string> items;
};

inline constexpr std::string_view kTriggerPrefix = "t:";
inline constexpr std::string_view kActionPrefix = "a:";

struct SkippedRow {
  std::size_t line = 0;  // 1-based physical line where the row starts
  std::string reason;
};

struct IngestResult {
  std::vector<RuleRecord> records;
  std::vector<Transaction> transactions;  // one per record, same order
  std::vector<SkippedRow> skipped;
};

// CSV, UTF-8, header
//   trigger_category,trigger_event,action_category,action_event,description
// Comma separated, RFC 4180 double-quote escaping, description optional.
// Rows with a missing/empty category or a wrong field count are skipped and
// reported. Throws IoError (unreadable, bad header) or EmptyDatasetError.
IngestResult ingest_dataset(std::istream& in);
IngestResult ingest_dataset_file(const std::filesystem::path& path);

Transaction to_transaction(const RuleRecord& record);

}  // namespace eudrec
