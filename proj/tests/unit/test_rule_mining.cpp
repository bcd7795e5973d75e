#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "eudrec/error.hpp"
#include "eudrec/rule_mining/apriori.hpp"
#include "eudrec/rule_mining/dataset.hpp"
#include "eudrec/rule_mining/rule_table.hpp"
#include "eudrec/text.hpp"
#include "support/oracles.hpp"

using namespace eudrec;
namespace fs = std::filesystem;

namespace {

const std::string kHeader = "trigger_category,trigger_event,action_category,action_event,description\n";

std::vector<Transaction> to_transactions(const std::vector<std::set<std::string>>& sets) {
  std::vector<Transaction> out;
  for (const auto& s : sets) out.push_back(Transaction{{s.begin(), s.end()}});
  return out;
}

// {t:w,a:i},{t:w,a:i},{t:m,a:l},{t:w,a:l}
std::vector<std::set<std::string>> four_fixture() {
  return {{"t:w", "a:i"}, {"t:w", "a:i"}, {"t:m", "a:l"}, {"t:w", "a:l"}};
}

IngestResult ingest(const std::string& text) {
  std::istringstream in(text);
  return ingest_dataset(in);
}

}  // namespace

TEST(Dataset, WeatherStationRow) {
  const auto r = ingest(kHeader + "weather_station,humidity_above,irrigation_system,disable,desc\n");
  ASSERT_EQ(r.records.size(), 1U);
  EXPECT_EQ(r.transactions[0].items, (std::vector<std::string>{"a:irrigation_system", "t:weather_station"}));
}

TEST(Dataset, QuotingNormalizationAndSkips) {
  const std::string text = "\xEF\xBB\xBF" + kHeader +
                           "Weather Station,rain,Irrigation-System,stop,\"says \"\"hi\"\", twice\"\n"
                           "door_sensor,open,,lock,missing action\n"
                           "\n"
                           "clock,7am,heating\n"
                           "clock,7am,heating,on\n"
                           "a,b,c,d,e,f\n"
                           "motion_sensor,seen,smart_light,on,\"spans\ntwo lines\"\n"
                           ",x,smart_light,on,missing trigger\n";
  const auto r = ingest(text);
  ASSERT_EQ(r.records.size(), 3U);
  EXPECT_EQ(r.records[0], (RuleRecord{"weather_station", "rain", "irrigation_system", "stop", "says \"hi\", twice"}));
  EXPECT_EQ(r.records[1].description, "");
  EXPECT_EQ(r.records[2].description, "spans\ntwo lines");
  ASSERT_EQ(r.skipped.size(), 4U);
  EXPECT_EQ(r.skipped[0].line, 3U);
  EXPECT_NE(r.skipped[0].reason.find("action_category"), std::string::npos);
  EXPECT_EQ(r.skipped[1].line, 5U);
  EXPECT_EQ(r.skipped[2].line, 7U);
  EXPECT_EQ(r.skipped[3].line, 10U);
}

TEST(Dataset, Errors) {
  EXPECT_THROW(ingest(""), EmptyDatasetError);
  EXPECT_THROW(ingest(kHeader), EmptyDatasetError);
  EXPECT_THROW(ingest(kHeader + ",,,,\n"), EmptyDatasetError);
  EXPECT_THROW(ingest("a,b,c\nx,y,z\n"), IoError);
  EXPECT_THROW(ingest_dataset_file("/nonexistent/rules.csv"), IoError);
  EXPECT_THROW(ingest(kHeader + "a,e,b,f,\"never closed\n"), EmptyDatasetError);
}

TEST(Dataset, UnterminatedQuoteIsSkippedRow) {
  const auto r = ingest(kHeader + "a,e,b,f,ok\nc,e,d,f,\"never closed\n");
  EXPECT_EQ(r.records.size(), 1U);
  ASSERT_EQ(r.skipped.size(), 1U);
  EXPECT_EQ(r.skipped[0].line, 3U);
}

TEST(Apriori, FourTransactionFixture) {
  const auto tx = to_transactions(four_fixture());
  const auto f = apriori(tx, 0.5);
  ASSERT_EQ(f.itemsets.size(), 4U);
  EXPECT_EQ(f.find({"t:w"})->support, 0.75);
  EXPECT_EQ(f.find({"a:i"})->support, 0.5);
  EXPECT_EQ(f.find({"a:l"})->support, 0.5);
  EXPECT_EQ(f.find({"a:i", "t:w"})->support, 0.5);
  EXPECT_EQ(f.find({"t:m"}), nullptr);

  const auto rules = generate_rules(f, 0.6);
  ASSERT_EQ(rules.size(), 2U);
  std::map<Itemset, double> conf;
  for (const auto& r : rules) conf[r.antecedent] = r.confidence;
  EXPECT_DOUBLE_EQ(conf.at({"t:w"}), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(conf.at({"a:i"}), 1.0);
}

TEST(Apriori, DegenerateAndEmptyCases) {
  const auto single = apriori(to_transactions({{"a", "b", "c"}}), 1.0);
  EXPECT_EQ(single.itemsets.size(), 7U);
  for (const auto& fi : single.itemsets) EXPECT_EQ(fi.support, 1.0);

  const auto distinct = apriori(to_transactions({{"a", "b"}, {"c", "d"}, {"e", "f"}}), 0.5);
  EXPECT_TRUE(distinct.itemsets.empty());
  EXPECT_TRUE(generate_rules(distinct, 0.5).empty());

  const auto singletons = apriori(to_transactions({{"a"}, {"a"}, {"b"}}), 0.3);
  EXPECT_TRUE(generate_rules(singletons, 0.1).empty());

  const std::vector<Transaction> none;
  EXPECT_THROW(apriori(none, 0.5), ValidationError);
  EXPECT_THROW(apriori(to_transactions(four_fixture()), 0.0), ValidationError);
  EXPECT_THROW(apriori(to_transactions(four_fixture()), 1.5), ValidationError);
  EXPECT_THROW(generate_rules(single, 0.0), ValidationError);
}

TEST(Apriori, ConfidenceOneKeepsOnlyExactImplications) {
  const auto f = apriori(to_transactions(four_fixture()), 0.25);
  for (const auto& r : generate_rules(f, 1.0)) EXPECT_EQ(r.count, r.antecedent_count);
}

TEST(Apriori, MissingSubsetIsConsistencyError) {
  FrequentItemsets broken;
  broken.transaction_count = 2;
  broken.itemsets.push_back({{"a", "b"}, 1, 0.5});
  broken.reindex();
  EXPECT_THROW(generate_rules(broken, 0.1), ConsistencyError);
}

TEST(Apriori, RandomDatasetsMatchPowerSetOracle) {
  gen::Rng rng(51);
  for (int rep = 0; rep < 150; ++rep) {
    const auto sets = gen::transactions(rng, 12, 8);
    const double ms = std::array{0.1, 0.25, 0.5, 1.0}[static_cast<std::size_t>(rep % 4)];
    const auto f = apriori(to_transactions(sets), ms);
    const auto expected = oracle::frequent_itemsets(sets, ms);
    ASSERT_EQ(f.itemsets.size(), expected.size());
    for (const auto& fi : f.itemsets) {
      const auto it = expected.find(oracle::ItemSet(fi.items.begin(), fi.items.end()));
      ASSERT_NE(it, expected.end());
      EXPECT_EQ(fi.count, it->second.count);
      EXPECT_EQ(fi.support, it->second.support);
      // anti-monotonicity
      for (std::size_t drop = 0; drop < fi.items.size() && fi.items.size() > 1; ++drop) {
        Itemset sub = fi.items;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_NE(f.find(sub), nullptr);
        EXPECT_GE(f.find(sub)->support, fi.support);
      }
    }
  }
}

TEST(Apriori, OutputOrderedBySizeThenLexicographically) {
  gen::Rng rng(52);
  const auto f = apriori(to_transactions(gen::transactions(rng, 12, 8)), 0.1);
  for (std::size_t i = 1; i < f.itemsets.size(); ++i) {
    const auto& a = f.itemsets[i - 1].items;
    const auto& b = f.itemsets[i].items;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(RuleTable, MineFixtureAndRoundTrip) {
  const auto r = ingest(kHeader + "w,e1,i,x,first\nw,e2,i,y,second\nm,e3,l,z,\nw,e4,l,z,\nw,e5,i,x,third\nw,e6,i,x,fourth\n");
  const RuleTable table = mine(r, MiningOptions{0.3, 0.6, 2});
  EXPECT_EQ(table.transaction_count, 6U);
  const auto& ex = table.examples.at({"w", "i"});
  ASSERT_EQ(ex.size(), 2U);
  EXPECT_EQ(ex[0].description, "first");
  EXPECT_EQ(ex[1].description, "second");
  EXPECT_EQ(table.examples.at({"m", "l"}).size(), 1U);

  const RuleTable back = RuleTable::from_json_text(table.to_json_text());
  EXPECT_EQ(back.to_json_text(), table.to_json_text());
  EXPECT_EQ(back.rules.size(), table.rules.size());
  EXPECT_EQ(back.examples, table.examples);
}

TEST(RuleTable, SampleDatasetIsDeterministic) {
  const auto a = mine_file(EUDREC_DATA_DIR "/sample_rules.csv", MiningOptions{});
  const auto b = mine_file(EUDREC_DATA_DIR "/sample_rules.csv", MiningOptions{});
  EXPECT_FALSE(a.rules.empty());
  EXPECT_EQ(a.to_json_text(), b.to_json_text());

  const fs::path dir = fs::temp_directory_path() / ("eudrec-rt-" + std::to_string(::getpid()));
  a.save(dir);
  EXPECT_EQ(read_file(dir / RuleTable::kFileName), a.to_json_text());
  EXPECT_EQ(RuleTable::load(dir).to_json_text(), a.to_json_text());
  fs::remove_all(dir);
  EXPECT_THROW(RuleTable::load(dir), IoError);
}

TEST(RuleTable, RulesSoundAgainstDatasetScan) {
  const auto data = ingest_dataset_file(EUDREC_DATA_DIR "/sample_rules.csv");
  const auto table = mine(data, MiningOptions{});
  std::vector<oracle::ItemSet> sets;
  for (const auto& t : data.transactions) sets.emplace_back(t.items.begin(), t.items.end());
  const double n = static_cast<double>(sets.size());
  for (const auto& r : table.rules) {
    oracle::ItemSet all(r.antecedent.begin(), r.antecedent.end());
    all.insert(r.consequent.begin(), r.consequent.end());
    const auto both = oracle::count_containing(sets, all);
    const auto ante = oracle::count_containing(sets, {r.antecedent.begin(), r.antecedent.end()});
    EXPECT_NEAR(r.support, static_cast<double>(both) / n, 1e-12);
    EXPECT_NEAR(r.confidence, static_cast<double>(both) / static_cast<double>(ante), 1e-12);
  }
}

TEST(RuleTable, FullSupportOnHeterogeneousDataIsEmpty) {
  const auto t = mine_file(EUDREC_DATA_DIR "/sample_rules.csv", MiningOptions{1.0, 0.1, 3});
  EXPECT_TRUE(t.rules.empty());
}
