#include "eudrec/rule_mining/dataset.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {
namespace {

constexpr std::array<std::string_view, 5> kHeader{"trigger_category", "trigger_event",
                                                  "action_category", "action_event",
                                                  "description"};

/// Reads one CSV record (which may span lines inside quotes). Returns
/// nullopt at end of input. `line` is advanced past consumed newlines.
struct CsvReader {
  std::istream& in;
  std::size_t line = 0;

  std::optional<std::vector<std::string>> next(std::size_t& start_line, bool& unterminated) {
    unterminated = false;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    start_line = line + 1;
    int ch;
    while ((ch = in.get()) != EOF) {
      any = true;
      const char c = static_cast<char>(ch);
      if (in_quotes) {
        if (c == '"') {
          if (in.peek() == '"') {
            in.get();
            field.push_back('"');
          } else {
            in_quotes = false;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"') {
        in_quotes = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '\r') {
        if (in.peek() == '\n') continue;
        ++line;
        fields.push_back(std::move(field));
        return fields;
      } else if (c == '\n') {
        ++line;
        fields.push_back(std::move(field));
        return fields;
      } else {
        field.push_back(c);
      }
    }
    if (!any) return std::nullopt;
    unterminated = in_quotes;
    ++line;
    fields.push_back(std::move(field));
    return fields;
  }
};

bool blank_row(const std::vector<std::string>& fields) {
  return std::all_of(fields.begin(), fields.end(), [](const std::string& f) { return is_blank(f); });
}

}  // namespace

Transaction to_transaction(const RuleRecord& record) {
  Transaction t;
  t.items = {std::string(kTriggerPrefix) + record.trigger_category,
             std::string(kActionPrefix) + record.action_category};
  std::sort(t.items.begin(), t.items.end());
  return t;
}

IngestResult ingest_dataset(std::istream& in) {
  if (!in) {
    throw IoError("dataset stream is not readable");
  }
  CsvReader reader{in};
  std::size_t start = 0;
  bool unterminated = false;

  auto header = reader.next(start, unterminated);
  if (!header) {
    throw EmptyDatasetError("dataset is empty");
  }
  if (!header->empty()) {
    std::string& first = header->front();
    if (first.rfind("\xEF\xBB\xBF", 0) == 0) first.erase(0, 3);  // UTF-8 BOM
  }
  const bool header_ok =
      header->size() >= 4 && header->size() <= 5 &&
      std::equal(header->begin(), header->end(), kHeader.begin(),
                 [](const std::string& got, std::string_view want) { return trim(got) == want; });
  if (!header_ok) {
    throw IoError("dataset header must be: trigger_category,trigger_event,action_category,"
                  "action_event,description");
  }

  IngestResult result;
  while (auto row = reader.next(start, unterminated)) {
    if (blank_row(*row)) continue;
    if (unterminated) {
      result.skipped.push_back({start, "unterminated quoted field"});
      continue;
    }
    if (row->size() < 4 || row->size() > 5) {
      result.skipped.push_back({start, "expected 4 or 5 fields, found " + std::to_string(row->size())});
      continue;
    }
    RuleRecord record;
    record.trigger_category = normalize_category((*row)[0]);
    record.trigger_event = std::string(trim((*row)[1]));
    record.action_category = normalize_category((*row)[2]);
    record.action_event = std::string(trim((*row)[3]));
    if (row->size() == 5) record.description = std::string(trim((*row)[4]));
    if (record.trigger_category.empty()) {
      result.skipped.push_back({start, "missing trigger_category"});
      continue;
    }
    if (record.action_category.empty()) {
      result.skipped.push_back({start, "missing action_category"});
      continue;
    }
    result.transactions.push_back(to_transaction(record));
    result.records.push_back(std::move(record));
  }
  if (result.records.empty()) {
    throw EmptyDatasetError("dataset has no valid rows (" + std::to_string(result.skipped.size()) +
                            " skipped)");
  }
  return result;
}

IngestResult ingest_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open dataset " + path.string());
  }
  return ingest_dataset(in);
}

}  // namespace eudrec
