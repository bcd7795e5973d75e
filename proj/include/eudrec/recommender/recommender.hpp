#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eudrec/recommender/policy.hpp"
#include "eudrec/rule_mining/rule_table.hpp"
#include "eudrec/user_model/repository.hpp"

namespace eudrec {

enum class Direction { action_given_trigger, trigger_given_action };

std::string_view direction_name(Direction direction);

struct Explanation {
  ExplanationLevel level = ExplanationLevel::terse;
  std::string body;
};

struct Recommendation {
  std::string input_category;  // the category the user picked
  std::string category;        // the suggested counterpart
  Direction direction = Direction::action_given_trigger;
  double confidence = 0.0;
  double support = 0.0;
  std::size_t pair_count = 0;         // rules pairing input and category
  std::size_t input_count = 0;        // rules using the input category
  std::size_t transaction_count = 0;  // rules in the dataset
  std::vector<RuleRecord> example_rules;
  std::optional<Explanation> explanation;
};

/// Serves suggestions from the currently published rule table. Only rules
/// with a single trigger and a single action item are served.
///
/// Ranking: confidence desc, then support desc, then category ascending.
/// publish() swaps the table atomically; readers see the old or the new
/// table, never a mix.
class Recommender {
 public:
  void publish(const RuleTable& table);
  bool published() const;

  /// Throws UnavailableError before the first publish, ValidationError for
  /// k == 0. Unknown categories yield an empty list.
  std::vector<Recommendation> recommend_actions(std::string_view trigger_category,
                                                std::size_t k) const;
  std::vector<Recommendation> recommend_triggers(std::string_view action_category,
                                                 std::size_t k) const;
  std::vector<Recommendation> recommend(Direction direction, std::string_view category,
                                        std::size_t k) const;

 private:
  struct Index {
    std::map<std::string, std::vector<Recommendation>, std::less<>> actions_by_trigger;
    std::map<std::string, std::vector<Recommendation>, std::less<>> triggers_by_action;
  };

  std::shared_ptr<const Index> snapshot() const;

  mutable std::mutex mutex_;
  std::shared_ptr<const Index> index_;
};

/// Explanation text for `rec` at `level`; empty for ExplanationLevel::none.
std::string explain(const Recommendation& rec, ExplanationLevel level);

/// Keeps the first policy.max_recommendations items (order untouched) and
/// attaches explanations at the policy's level; `none` removes them.
std::vector<Recommendation> tailor(std::vector<Recommendation> recommendations,
                                   const ResolvedPolicy& policy);

/// Resolves the user's current labels, then tailors. Unknown users and
/// missing traits fall back to the policy's default row.
std::vector<Recommendation> tailor(std::vector<Recommendation> recommendations,
                                   const std::string& username, const UserRepository& users,
                                   const ThresholdTable& thresholds, const TailoringPolicy& policy);

}  // namespace eudrec
