#include "eudrec/rule_mining/rule_table.hpp"

#include <json.hpp>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

using ojson = nlohmann::ordered_json;

namespace {

ojson record_to_json(const RuleRecord& r) {
  return ojson{{"triggerCategory", r.trigger_category},
               {"triggerEvent", r.trigger_event},
               {"actionCategory", r.action_category},
               {"actionEvent", r.action_event},
               {"description", r.description}};
}

RuleRecord record_from_json(const ojson& j) {
  return RuleRecord{j.at("triggerCategory").get<std::string>(), j.at("triggerEvent").get<std::string>(),
                    j.at("actionCategory").get<std::string>(), j.at("actionEvent").get<std::string>(),
                    j.value("description", std::string{})};
}

}  // namespace

std::string RuleTable::to_json_text() const {
  ojson doc;
  doc["options"] = {{"minSupport", options.min_support},
                    {"minConfidence", options.min_confidence},
                    {"examplesPerPair", options.examples_per_pair}};
  doc["transactionCount"] = transaction_count;
  doc["itemsetCount"] = itemset_count;
  doc["skippedRows"] = skipped_rows;
  ojson rule_list = ojson::array();
  for (const auto& r : rules) {
    rule_list.push_back(ojson{{"antecedent", r.antecedent},
                              {"consequent", r.consequent},
                              {"support", r.support},
                              {"confidence", r.confidence},
                              {"count", r.count},
                              {"antecedentCount", r.antecedent_count}});
  }
  doc["rules"] = std::move(rule_list);
  ojson example_list = ojson::array();
  for (const auto& [pair, records] : examples) {
    ojson recs = ojson::array();
    for (const auto& r : records) recs.push_back(record_to_json(r));
    example_list.push_back(ojson{{"triggerCategory", pair.first},
                                 {"actionCategory", pair.second},
                                 {"records", std::move(recs)}});
  }
  doc["examples"] = std::move(example_list);
  return doc.dump(2) + "\n";
}

RuleTable RuleTable::from_json_text(std::string_view text) {
  try {
    const ojson doc = ojson::parse(text);
    RuleTable table;
    const auto& opts = doc.at("options");
    table.options.min_support = opts.at("minSupport").get<double>();
    table.options.min_confidence = opts.at("minConfidence").get<double>();
    table.options.examples_per_pair = opts.at("examplesPerPair").get<std::size_t>();
    table.transaction_count = doc.at("transactionCount").get<std::size_t>();
    table.itemset_count = doc.at("itemsetCount").get<std::size_t>();
    table.skipped_rows = doc.value("skippedRows", std::size_t{0});
    for (const auto& r : doc.at("rules")) {
      table.rules.push_back({r.at("antecedent").get<Itemset>(), r.at("consequent").get<Itemset>(),
                             r.at("support").get<double>(), r.at("confidence").get<double>(),
                             r.at("count").get<std::size_t>(),
                             r.at("antecedentCount").get<std::size_t>()});
    }
    for (const auto& e : doc.at("examples")) {
      auto& records = table.examples[{e.at("triggerCategory").get<std::string>(),
                                      e.at("actionCategory").get<std::string>()}];
      for (const auto& r : e.at("records")) records.push_back(record_from_json(r));
    }
    return table;
  } catch (const ojson::exception& e) {
    throw IoError(std::string("malformed rule table: ") + e.what());
  }
}

void RuleTable::save(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create " + dir.string() + ": " + ec.message());
  }
  write_file_atomic(dir / kFileName, to_json_text());
}

RuleTable RuleTable::load(const std::filesystem::path& dir) {
  return from_json_text(read_file(dir / kFileName));
}

RuleTable mine(const IngestResult& dataset, const MiningOptions& options) {
  if (dataset.transactions.empty()) {
    throw EmptyDatasetError("no transactions to mine");
  }
  const FrequentItemsets frequent = apriori(dataset.transactions, options.min_support);
  RuleTable table;
  table.options = options;
  table.transaction_count = dataset.transactions.size();
  table.itemset_count = frequent.itemsets.size();
  table.skipped_rows = dataset.skipped.size();
  table.rules = generate_rules(frequent, options.min_confidence);
  for (const auto& record : dataset.records) {
    auto& slot = table.examples[{record.trigger_category, record.action_category}];
    if (slot.size() < options.examples_per_pair) {
      slot.push_back(record);
    }
  }
  return table;
}

RuleTable mine_file(const std::filesystem::path& dataset, const MiningOptions& options) {
  return mine(ingest_dataset_file(dataset), options);
}

}  // namespace eudrec
