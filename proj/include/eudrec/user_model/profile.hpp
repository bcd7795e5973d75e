#pragma once

#include <json.hpp>
#include <map>
#include <set>
#include <string>

#include "eudrec/psychometrics/scoring.hpp"

namespace eudrec {

/// A smart-home object category and the roles it can play in a rule.
struct SmartObject {
  std::string category;  // lower_snake_case
  bool can_trigger = false;
  bool can_act = false;
  std::string display_name;

  /// Normalizes `category` in place; throws ValidationError if it ends up
  /// empty or no role is set.
  void normalize_and_validate();
};

/// Goals a profile may hold. Seeded with energy_saving, safety and comfort.
class GoalVocabulary {
 public:
  static GoalVocabulary defaults();
  explicit GoalVocabulary(std::set<std::string> goals = {});

  bool contains(const std::string& goal) const { return goals_.count(goal) != 0; }
  const std::set<std::string>& goals() const { return goals_; }

 private:
  std::set<std::string> goals_;
};

struct UserProfile {
  std::string username;  // case-sensitive opaque key
  std::map<Trait, TraitScore> trait_scores;  // any subset of the four traits
  std::set<std::string> owned_objects;
  std::map<std::string, double> object_preferences;  // category -> [0, 1]
  std::set<std::string> goals;

  bool operator==(const UserProfile&) const = default;
};

/// Checks a username: non-empty and not whitespace-only.
void validate_username(const std::string& username);

/// Normalizes categories and goal names, then validates every invariant
/// against `goals`. Throws ValidationError naming the offending field.
UserProfile normalize_profile(UserProfile profile, const GoalVocabulary& goals);

nlohmann::json profile_to_json(const UserProfile& profile);
/// Throws ValidationError on malformed documents (no invariant checks).
UserProfile profile_from_json(const nlohmann::json& doc);

nlohmann::json response_set_to_json(const ResponseSet& responses);
ResponseSet response_set_from_json(const nlohmann::json& doc);

}  // namespace eudrec
