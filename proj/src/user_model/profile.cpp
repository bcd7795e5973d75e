#include "eudrec/user_model/profile.hpp"

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

using nlohmann::json;

void SmartObject::normalize_and_validate() {
  category = normalize_category(category);
  if (category.empty()) {
    throw ValidationError("smart object category is empty", "category");
  }
  if (!can_trigger && !can_act) {
    throw ValidationError("smart object " + category + " has no trigger or action role", category);
  }
}

GoalVocabulary GoalVocabulary::defaults() {
  return GoalVocabulary({"energy_saving", "safety", "comfort"});
}

GoalVocabulary::GoalVocabulary(std::set<std::string> goals) {
  for (const auto& g : goals) {
    goals_.insert(normalize_category(g));
  }
}

void validate_username(const std::string& username) {
  if (is_blank(username)) {
    throw ValidationError("username must be non-empty and not whitespace-only", "username");
  }
}

UserProfile normalize_profile(UserProfile profile, const GoalVocabulary& goals) {
  validate_username(profile.username);

  for (const auto& [trait, score] : profile.trait_scores) {
    if (score.trait != trait) {
      throw ValidationError("trait score stored under " + std::string(trait_name(trait)) +
                                " is for " + std::string(trait_name(score.trait)),
                            std::string(trait_name(trait)));
    }
    if (!parse_band_label(trait, score.label)) {
      throw ValidationError("label '" + score.label + "' is not valid for " +
                                std::string(trait_name(trait)),
                            std::string(trait_name(trait)));
    }
  }

  std::set<std::string> owned;
  for (const auto& category : profile.owned_objects) {
    std::string normalized = normalize_category(category);
    if (normalized.empty()) {
      throw ValidationError("owned object category is empty", "ownedObjects");
    }
    owned.insert(std::move(normalized));
  }
  profile.owned_objects = std::move(owned);

  std::map<std::string, double> preferences;
  for (const auto& [category, level] : profile.object_preferences) {
    std::string normalized = normalize_category(category);
    if (normalized.empty()) {
      throw ValidationError("preference category is empty", "objectPreferences");
    }
    if (!(level >= 0.0 && level <= 1.0)) {
      throw ValidationError("preference for " + normalized + " must lie in [0, 1]", normalized);
    }
    if (!preferences.emplace(normalized, level).second) {
      throw ValidationError("preference for " + normalized + " given twice", normalized);
    }
  }
  profile.object_preferences = std::move(preferences);

  std::set<std::string> held;
  for (const auto& goal : profile.goals) {
    std::string normalized = normalize_category(goal);
    if (!goals.contains(normalized)) {
      throw ValidationError("unknown goal '" + goal + "'", goal);
    }
    held.insert(std::move(normalized));
  }
  profile.goals = std::move(held);
  return profile;
}

json profile_to_json(const UserProfile& profile) {
  json scores = json::object();
  for (const auto& [trait, score] : profile.trait_scores) {
    scores[std::string(trait_name(trait))] = {{"value", score.value}, {"label", score.label}};
  }
  return json{{"username", profile.username},
              {"traitScores", scores},
              {"ownedObjects", profile.owned_objects},
              {"objectPreferences", profile.object_preferences},
              {"goals", profile.goals}};
}

UserProfile profile_from_json(const json& doc) {
  try {
    if (!doc.is_object()) {
      throw ValidationError("profile document must be an object");
    }
    UserProfile profile;
    profile.username = doc.at("username").get<std::string>();
    if (doc.contains("traitScores")) {
      for (const auto& [name, entry] : doc.at("traitScores").items()) {
        const auto trait = parse_trait(name);
        if (!trait) {
          throw ValidationError("unknown trait '" + name + "'", name);
        }
        profile.trait_scores[*trait] =
            TraitScore{*trait, entry.at("value").get<double>(), entry.at("label").get<std::string>()};
      }
    }
    if (doc.contains("ownedObjects")) {
      profile.owned_objects = doc.at("ownedObjects").get<std::set<std::string>>();
    }
    if (doc.contains("objectPreferences")) {
      profile.object_preferences = doc.at("objectPreferences").get<std::map<std::string, double>>();
    }
    if (doc.contains("goals")) {
      profile.goals = doc.at("goals").get<std::set<std::string>>();
    }
    return profile;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed profile document: ") + e.what());
  }
}

json response_set_to_json(const ResponseSet& responses) {
  return json{{"username", responses.username},
              {"trait", trait_name(responses.trait)},
              {"answers", responses.answers},
              {"submittedAt", format_timestamp(responses.submitted_at)}};
}

ResponseSet response_set_from_json(const json& doc) {
  try {
    ResponseSet r;
    r.username = doc.at("username").get<std::string>();
    const auto name = doc.at("trait").get<std::string>();
    const auto trait = parse_trait(name);
    if (!trait) {
      throw ValidationError("unknown trait '" + name + "'", name);
    }
    r.trait = *trait;
    r.answers = doc.at("answers").get<std::map<std::string, int>>();
    r.submitted_at = parse_timestamp(doc.at("submittedAt").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed response document: ") + e.what());
  }
}

}  // namespace eudrec
