#include <gtest/gtest.h>

#include "eudrec/error.hpp"
#include "eudrec/psychometrics/questionnaire.hpp"
#include "eudrec/psychometrics/scoring.hpp"
#include "eudrec/psychometrics/thresholds.hpp"
#include "support/oracles.hpp"

using namespace eudrec;

namespace {

Questionnaire make_questionnaire(Trait trait, const std::vector<Keying>& keyings, int points = 5) {
  Questionnaire q;
  q.trait = trait;
  q.scale_points = points;
  for (std::size_t i = 0; i < keyings.size(); ++i) {
    q.items.push_back({"q" + std::to_string(i), "item " + std::to_string(i), keyings[i]});
  }
  return q;
}

ResponseSet make_responses(const Questionnaire& q, const std::vector<int>& answers) {
  ResponseSet r;
  r.username = "u";
  r.trait = q.trait;
  for (std::size_t i = 0; i < answers.size(); ++i) r.answers[q.items[i].id] = answers[i];
  return r;
}

TraitThresholds band(Trait t, double lo, double hi) { return {t, lo, hi}; }

}  // namespace

TEST(Trait, NamesRoundTrip) {
  for (Trait t : kAllTraits) EXPECT_EQ(parse_trait(trait_name(t)), t);
  EXPECT_EQ(trait_name(Trait::need_for_cognition), "needForCognition");
  EXPECT_EQ(range_field_name(Trait::locus_of_control), "rangeLocusOfControl");
  EXPECT_FALSE(parse_trait("SelfEfficacy"));
  EXPECT_EQ(band_label(Trait::mindset, Band::high_pole), "growth");
  EXPECT_EQ(band_label(Trait::locus_of_control, Band::low_pole), "external");
  EXPECT_EQ(parse_band_label(Trait::self_efficacy, "external"), std::nullopt);
}

TEST(Scoring, ConstantAnswers) {
  const auto q = make_questionnaire(Trait::self_efficacy, std::vector<Keying>(10, Keying::positive));
  EXPECT_DOUBLE_EQ(score_responses(q, make_responses(q, std::vector<int>(10, 3))), 3.0);
}

TEST(Scoring, ReverseKeyedPair) {
  const auto q = make_questionnaire(Trait::self_efficacy, {Keying::positive, Keying::negative});
  EXPECT_DOUBLE_EQ(score_responses(q, make_responses(q, {5, 1})), 5.0);
}

TEST(Scoring, AllNegativeLowestAnswers) {
  const auto q = make_questionnaire(Trait::locus_of_control, std::vector<Keying>(5, Keying::negative));
  EXPECT_DOUBLE_EQ(score_responses(q, make_responses(q, std::vector<int>(5, 1))), 5.0);
}

TEST(Scoring, ErrorsNameTheItem) {
  const auto q = make_questionnaire(Trait::self_efficacy, {Keying::positive, Keying::positive});
  auto r = make_responses(q, {3, 7});
  try {
    score_responses(q, r);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.subject(), "q1");
  }
  r = make_responses(q, {3});
  try {
    score_responses(q, r);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.subject(), "q1");
  }
  r = make_responses(q, {3, 3});
  r.answers["zz"] = 2;
  EXPECT_THROW(score_responses(q, r), ValidationError);
  r = make_responses(q, {0, 3});
  EXPECT_THROW(score_responses(q, r), ValidationError);
  r = make_responses(q, {3, 3});
  r.trait = Trait::mindset;
  EXPECT_THROW(score_responses(q, r), ValidationError);
}

TEST(Scoring, RandomizedAgainstOracle) {
  gen::Rng rng(21);
  for (int rep = 0; rep < 2000; ++rep) {
    const int points = gen::uniform_int(rng, 2, 9);
    const int n = gen::uniform_int(rng, 1, 12);
    std::vector<Keying> keyings;
    std::vector<bool> negative;
    std::vector<int> answers;
    for (int i = 0; i < n; ++i) {
      const bool neg = gen::uniform_int(rng, 0, 1) == 1;
      negative.push_back(neg);
      keyings.push_back(neg ? Keying::negative : Keying::positive);
      answers.push_back(gen::uniform_int(rng, 1, points));
    }
    const auto q = make_questionnaire(Trait::need_for_cognition, keyings, points);
    EXPECT_EQ(score_responses(q, make_responses(q, answers)),
              oracle::likert_mean(answers, negative, points));
  }
}

TEST(Classify, PublishedExamples) {
  EXPECT_EQ(classify(1.8, band(Trait::locus_of_control, 2.885, 3.615)), "external");
  EXPECT_EQ(classify(3.0, band(Trait::need_for_cognition, 3.46, 3.98)), "low");
  EXPECT_EQ(classify(3.52, band(Trait::self_efficacy, 3.52, 3.96)), "medium");
}

TEST(Classify, ClosedBandAndPoles) {
  const auto t = band(Trait::mindset, 2.5, 3.5);
  EXPECT_EQ(classify(2.4999, t), "fixed");
  EXPECT_EQ(classify(2.5, t), "medium");
  EXPECT_EQ(classify(3.5, t), "medium");
  EXPECT_EQ(classify(3.5001, t), "growth");
  EXPECT_EQ(classify(4.0, band(Trait::locus_of_control, 2.885, 3.615)), "internal");
}

TEST(Classify, ScoreAndClassifyRejectsForeignThresholds) {
  const auto q = make_questionnaire(Trait::self_efficacy, {Keying::positive});
  EXPECT_THROW(score_and_classify(q, make_responses(q, {3}), band(Trait::mindset, 2, 3)),
               ValidationError);
  const TraitScore s = score_and_classify(q, make_responses(q, {4}), band(Trait::self_efficacy, 3.52, 3.96));
  EXPECT_EQ(s, (TraitScore{Trait::self_efficacy, 4.0, "high"}));
}

TEST(Thresholds, DefaultsMatchPublishedRanges) {
  const auto table = ThresholdTable::defaults();
  EXPECT_EQ(table.resolve(Trait::self_efficacy), band(Trait::self_efficacy, 3.52, 3.96));
  EXPECT_EQ(table.resolve(Trait::need_for_cognition), band(Trait::need_for_cognition, 3.46, 3.98));
  EXPECT_EQ(table.resolve(Trait::locus_of_control), band(Trait::locus_of_control, 2.885, 3.615));
  EXPECT_TRUE(table.is_derived(Trait::mindset));
  EXPECT_FALSE(table.is_derived(Trait::self_efficacy));
}

TEST(Thresholds, MindsetFallsBackBelowThirtyScores) {
  const auto table = ThresholdTable::defaults();
  std::vector<double> values(29, 4.0);
  EXPECT_EQ(table.resolve(Trait::mindset, values), band(Trait::mindset, 2.5, 3.5));
}

TEST(Thresholds, MindsetPercentilesFromStoredScores) {
  const auto table = ThresholdTable::defaults();
  // 1.0, 1.1, ..., 4.0: 31 values, so rank positions are 0.33 * 30 = 9.9 and
  // 0.67 * 30 = 20.1.
  std::vector<double> values;
  for (int i = 0; i <= 30; ++i) values.push_back(1.0 + 0.1 * i);
  const auto t = table.resolve(Trait::mindset, values);
  EXPECT_NEAR(t.medium_low, 1.0 + 0.1 * 9.9, 1e-12);
  EXPECT_NEAR(t.medium_high, 1.0 + 0.1 * 20.1, 1e-12);
}

TEST(Thresholds, PercentileInterpolates) {
  const std::vector<double> v{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(percentile(v, 0), 1);
  EXPECT_DOUBLE_EQ(percentile(v, 100), 5);
  EXPECT_DOUBLE_EQ(percentile(v, 50), 3);
  EXPECT_DOUBLE_EQ(percentile(v, 12.5), 1.5);
  EXPECT_THROW(percentile({}, 50), ValidationError);
}

TEST(Thresholds, FromJson) {
  const auto table = ThresholdTable::from_json(nlohmann::json::parse(R"({
      "selfEfficacy": {"medium_low": 3.0, "medium_high": 3.5},
      "locusOfControl": {"percentiles": [25, 75], "min_samples": 2, "fallback": [2, 4]}})"));
  EXPECT_EQ(table.resolve(Trait::self_efficacy), band(Trait::self_efficacy, 3.0, 3.5));
  EXPECT_EQ(table.resolve(Trait::need_for_cognition), band(Trait::need_for_cognition, 3.46, 3.98));
  EXPECT_TRUE(table.is_derived(Trait::locus_of_control));
  const std::vector<double> one{3.0};
  EXPECT_EQ(table.resolve(Trait::locus_of_control, one), band(Trait::locus_of_control, 2, 4));
  EXPECT_THROW(ThresholdTable::from_json(nlohmann::json::parse(R"({"bogus": {}})")), LoadError);
  EXPECT_THROW(ThresholdTable::from_json(
                   nlohmann::json::parse(R"({"selfEfficacy": {"medium_low": 4, "medium_high": 3}})")),
               LoadError);
}

TEST(Questionnaires, BundledDocument) {
  const auto bank = load_questionnaires_file(EUDREC_DATA_DIR "/questionnaires.json");
  ASSERT_EQ(bank.size(), 4U);
  EXPECT_EQ(bank.find(Trait::self_efficacy)->items.size(), 10U);
  EXPECT_EQ(bank.find(Trait::need_for_cognition)->items.size(), 10U);
  EXPECT_EQ(bank.find(Trait::locus_of_control)->items.size(), 5U);
  EXPECT_EQ(bank.find(Trait::mindset)->items.size(), 8U);
  for (const auto& [trait, q] : bank.all()) {
    bool any_negative = false;
    for (const auto& item : q.items) any_negative |= item.keying == Keying::negative;
    EXPECT_TRUE(any_negative) << trait_name(trait);
  }
}

TEST(Questionnaires, EmptyDocumentGivesEmptyBank) {
  EXPECT_TRUE(load_questionnaires("").empty());
  EXPECT_TRUE(load_questionnaires("  \n").empty());
}

TEST(Questionnaires, LoadErrorsCarryLocation) {
  const std::string dup = R"({"questionnaires": [
      {"trait": "selfEfficacy", "items": [{"id": "a", "text": "x", "keying": "positive"}]},
      {"trait": "selfEfficacy", "items": [{"id": "b", "text": "y", "keying": "positive"}]}]})";
  EXPECT_THROW(load_questionnaires(dup, "dup.json"), LoadError);

  const std::string bad_keying = R"({"questionnaires": [
      {"trait": "mindset", "items": [{"id": "a", "text": "x", "keying": "sideways"}]}]})";
  try {
    load_questionnaires(bad_keying, "k.json");
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("k.json"), std::string::npos) << what;
    EXPECT_NE(what.find("items[0]"), std::string::npos) << what;
  }

  EXPECT_THROW(load_questionnaires(R"({"questionnaires": [{"items": []}]})"), LoadError);
  EXPECT_THROW(load_questionnaires("{not json"), LoadError);
  const std::string short_keying = R"({"questionnaires": [
      {"trait": "mindset", "items": [{"id": "a", "text": "x", "keying": "-"}]}]})";
  EXPECT_EQ(load_questionnaires(short_keying).find(Trait::mindset)->items[0].keying, Keying::negative);
}
