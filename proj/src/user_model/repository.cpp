#include "eudrec/user_model/repository.hpp"

#include <cstdio>
#include <functional>

#include "eudrec/error.hpp"
#include "eudrec/psychometrics/scoring.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

UserRepository::UserRepository(std::shared_ptr<DocumentStore> store, GoalVocabulary goals)
    : store_(std::move(store)), goals_(std::move(goals)) {
  if (!store_) {
    throw ValidationError("UserRepository needs a document store");
  }
}

std::mutex& UserRepository::lock_for(const std::string& username) const {
  return stripes_[std::hash<std::string>{}(username) % stripes_.size()];
}

std::string UserRepository::history_prefix(const std::string& username, Trait trait) const {
  return escape_key(username) + "~" + std::string(trait_name(trait)) + "~";
}

UserProfile UserRepository::upsert_profile(UserProfile profile) {
  UserProfile normalized = normalize_profile(std::move(profile), goals_);
  std::lock_guard lock(lock_for(normalized.username));
  store_->put(kUsers, normalized.username, profile_to_json(normalized));
  return normalized;
}

std::optional<UserProfile> UserRepository::find_profile(const std::string& username) const {
  auto doc = store_->get(kUsers, username);
  if (!doc) return std::nullopt;
  return profile_from_json(*doc);
}

UserProfile UserRepository::get_profile(const std::string& username) const {
  auto profile = find_profile(username);
  if (!profile) {
    throw NotFoundError("user not found", username);
  }
  return *std::move(profile);
}

void UserRepository::record_trait_result(const std::string& username, Trait trait,
                                         const ResponseSet& responses, const TraitScore& score) {
  validate_username(username);
  if (score.trait != trait || responses.trait != trait) {
    throw ValidationError("trait mismatch: recording " + std::string(trait_name(trait)) +
                              " with score for " + std::string(trait_name(score.trait)) +
                              " and responses for " + std::string(trait_name(responses.trait)),
                          std::string(trait_name(trait)));
  }
  if (responses.username != username) {
    throw ValidationError("responses belong to '" + responses.username + "'", "username");
  }
  if (!parse_band_label(trait, score.label)) {
    throw ValidationError("label '" + score.label + "' is not valid for " +
                          std::string(trait_name(trait)));
  }

  std::lock_guard lock(lock_for(username));
  UserProfile profile = find_profile(username).value_or(UserProfile{username, {}, {}, {}, {}});
  profile.trait_scores[trait] = score;

  const std::string prefix = history_prefix(username, trait);
  const std::size_t attempt = store_->keys_with_prefix(kResponses, prefix).size() + 1;
  char seq[16];
  std::snprintf(seq, sizeof(seq), "%06zu", attempt);
  const std::string key = prefix + seq + "~" + compact_timestamp(responses.submitted_at);

  // History first: a crash between the two writes leaves an extra attempt,
  // never a score without its answers.
  store_->put(kResponses, key, response_set_to_json(responses));
  store_->put(kUsers, username, profile_to_json(profile));
}

std::vector<ResponseSet> UserRepository::history(const std::string& username, Trait trait) const {
  std::vector<ResponseSet> out;
  for (const auto& key : store_->keys_with_prefix(kResponses, history_prefix(username, trait))) {
    if (auto doc = store_->get(kResponses, key)) {
      out.push_back(response_set_from_json(*doc));
    }
  }
  return out;
}

std::vector<std::string> UserRepository::usernames() const { return store_->keys(kUsers); }

std::vector<UserProfile> UserRepository::all_profiles() const {
  std::vector<UserProfile> out;
  for (const auto& name : usernames()) {
    if (auto profile = find_profile(name)) {
      out.push_back(*std::move(profile));
    }
  }
  return out;
}

std::vector<double> UserRepository::trait_values(Trait trait) const {
  std::vector<double> values;
  for (const auto& profile : all_profiles()) {
    if (auto it = profile.trait_scores.find(trait); it != profile.trait_scores.end()) {
      values.push_back(it->second.value);
    }
  }
  return values;
}

TraitThresholds UserRepository::thresholds_for(Trait trait, const ThresholdTable& table) const {
  if (!table.is_derived(trait)) {
    return table.resolve(trait);
  }
  const std::vector<double> values = trait_values(trait);
  return table.resolve(trait, values);
}

std::map<Trait, TraitScore> UserRepository::current_scores(const UserProfile& profile,
                                                           const ThresholdTable& table) const {
  std::map<Trait, TraitScore> out;
  for (const auto& [trait, score] : profile.trait_scores) {
    const TraitThresholds t = thresholds_for(trait, table);
    out[trait] = TraitScore{trait, score.value, classify(score.value, t)};
  }
  return out;
}

}  // namespace eudrec
