#include "eudrec/recommender/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {
namespace {

std::optional<std::string> strip_prefix(const std::string& item, std::string_view prefix) {
  if (item.size() > prefix.size() && item.compare(0, prefix.size(), prefix) == 0) {
    return item.substr(prefix.size());
  }
  return std::nullopt;
}

bool ranks_before(const Recommendation& a, const Recommendation& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  if (a.support != b.support) return a.support > b.support;
  return a.category < b.category;
}

std::string fixed3(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

}  // namespace

std::string_view direction_name(Direction direction) {
  switch (direction) {
    case Direction::action_given_trigger:
      return "action_given_trigger";
    case Direction::trigger_given_action:
      return "trigger_given_action";
  }
  return {};
}

void Recommender::publish(const RuleTable& table) {
  auto index = std::make_shared<Index>();
  for (const auto& rule : table.rules) {
    if (rule.antecedent.size() != 1 || rule.consequent.size() != 1) continue;
    const std::string& from = rule.antecedent.front();
    const std::string& to = rule.consequent.front();

    Recommendation rec;
    rec.confidence = rule.confidence;
    rec.support = rule.support;
    rec.pair_count = rule.count;
    rec.input_count = rule.antecedent_count;
    rec.transaction_count = table.transaction_count;

    std::string trigger;
    std::string action;
    if (auto t = strip_prefix(from, kTriggerPrefix), a = strip_prefix(to, kActionPrefix); t && a) {
      trigger = *t;
      action = *a;
      rec.direction = Direction::action_given_trigger;
      rec.input_category = trigger;
      rec.category = action;
    } else if (auto a2 = strip_prefix(from, kActionPrefix), t2 = strip_prefix(to, kTriggerPrefix);
               a2 && t2) {
      trigger = *t2;
      action = *a2;
      rec.direction = Direction::trigger_given_action;
      rec.input_category = action;
      rec.category = trigger;
    } else {
      continue;
    }
    if (auto ex = table.examples.find({trigger, action}); ex != table.examples.end()) {
      rec.example_rules = ex->second;
    }
    auto& bucket = rec.direction == Direction::action_given_trigger
                       ? index->actions_by_trigger[rec.input_category]
                       : index->triggers_by_action[rec.input_category];
    bucket.push_back(std::move(rec));
  }
  for (auto* by_input : {&index->actions_by_trigger, &index->triggers_by_action}) {
    for (auto& [input, recs] : *by_input) {
      std::sort(recs.begin(), recs.end(), ranks_before);
    }
  }
  std::lock_guard lock(mutex_);
  index_ = std::move(index);
}

bool Recommender::published() const { return snapshot() != nullptr; }

std::shared_ptr<const Recommender::Index> Recommender::snapshot() const {
  std::lock_guard lock(mutex_);
  return index_;
}

std::vector<Recommendation> Recommender::recommend(Direction direction, std::string_view category,
                                                   std::size_t k) const {
  if (k == 0) {
    throw ValidationError("k must be positive", "k");
  }
  const auto index = snapshot();
  if (!index) {
    throw UnavailableError("no rule table has been published");
  }
  const auto& by_input = direction == Direction::action_given_trigger ? index->actions_by_trigger
                                                                      : index->triggers_by_action;
  const auto it = by_input.find(normalize_category(category));
  if (it == by_input.end()) {
    return {};
  }
  const std::size_t n = std::min(k, it->second.size());
  return {it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Recommendation> Recommender::recommend_actions(std::string_view trigger_category,
                                                           std::size_t k) const {
  return recommend(Direction::action_given_trigger, trigger_category, k);
}

std::vector<Recommendation> Recommender::recommend_triggers(std::string_view action_category,
                                                            std::size_t k) const {
  return recommend(Direction::trigger_given_action, action_category, k);
}

std::string explain(const Recommendation& rec, ExplanationLevel level) {
  const bool forward = rec.direction == Direction::action_given_trigger;
  const std::string& trigger = forward ? rec.input_category : rec.category;
  const std::string& action = forward ? rec.category : rec.input_category;
  switch (level) {
    case ExplanationLevel::none:
      return {};
    case ExplanationLevel::terse: {
      const long pct = std::lround(rec.confidence * 100.0);
      if (forward) {
        return std::to_string(pct) + "% of the rules triggered by " + trigger + " act on " +
               action + ".";
      }
      return std::to_string(pct) + "% of the rules acting on " + action +
             " are triggered by " + trigger + ".";
    }
    case ExplanationLevel::detailed: {
      std::string body =
          forward ? std::to_string(rec.pair_count) + " of the " + std::to_string(rec.input_count) +
                        " rules triggered by " + trigger + " act on " + action
                  : std::to_string(rec.pair_count) + " of the " + std::to_string(rec.input_count) +
                        " rules acting on " + action + " are triggered by " + trigger;
      body += " (confidence " + fixed3(rec.confidence) + "). The pair appears in " +
              std::to_string(rec.pair_count) + " of all " + std::to_string(rec.transaction_count) +
              " rules in the dataset (support " + fixed3(rec.support) + ").";
      return body;
    }
  }
  return {};
}

std::vector<Recommendation> tailor(std::vector<Recommendation> recommendations,
                                   const ResolvedPolicy& policy) {
  if (recommendations.size() > policy.max_recommendations) {
    recommendations.resize(policy.max_recommendations);
  }
  for (auto& rec : recommendations) {
    if (policy.explanation_level == ExplanationLevel::none) {
      rec.explanation.reset();
    } else {
      rec.explanation = Explanation{policy.explanation_level, explain(rec, policy.explanation_level)};
    }
  }
  return recommendations;
}

std::vector<Recommendation> tailor(std::vector<Recommendation> recommendations,
                                   const std::string& username, const UserRepository& users,
                                   const ThresholdTable& thresholds, const TailoringPolicy& policy) {
  std::map<Trait, TraitScore> scores;
  if (auto profile = users.find_profile(username)) {
    scores = users.current_scores(*profile, thresholds);
  }
  return tailor(std::move(recommendations), policy.resolve(scores));
}

}  // namespace eudrec
