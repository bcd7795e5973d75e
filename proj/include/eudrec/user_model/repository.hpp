#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eudrec/psychometrics/thresholds.hpp"
#include "eudrec/user_model/document_store.hpp"
#include "eudrec/user_model/profile.hpp"

namespace eudrec {

/// User profiles and questionnaire history over a DocumentStore.
///
/// Layout: collection "users" keyed by username; collection "responses"
/// keyed by "<escaped username>~<trait>~<attempt, 6 digits>~<compact UTC time>".
/// Writes for one username are serialized; reads never block on other users.
class UserRepository {
 public:
  static constexpr std::string_view kUsers = "users";
  static constexpr std::string_view kResponses = "responses";

  explicit UserRepository(std::shared_ptr<DocumentStore> store,
                          GoalVocabulary goals = GoalVocabulary::defaults());

  /// Normalizes and validates, then stores. Returns the stored value.
  UserProfile upsert_profile(UserProfile profile);
  /// Throws NotFoundError for unknown usernames (case-sensitive match).
  UserProfile get_profile(const std::string& username) const;
  std::optional<UserProfile> find_profile(const std::string& username) const;

  /// Replaces the trait score and appends `responses` to the history,
  /// creating a minimal profile when the user is unknown.
  void record_trait_result(const std::string& username, Trait trait, const ResponseSet& responses,
                           const TraitScore& score);

  /// Every recorded attempt for (username, trait), oldest first.
  std::vector<ResponseSet> history(const std::string& username, Trait trait) const;

  std::vector<std::string> usernames() const;
  std::vector<UserProfile> all_profiles() const;

  /// Current stored values of `trait` across all users.
  std::vector<double> trait_values(Trait trait) const;

  /// Thresholds for `trait`, feeding stored values to derived bands.
  TraitThresholds thresholds_for(Trait trait, const ThresholdTable& table) const;

  /// The profile's scores relabelled against the current thresholds.
  std::map<Trait, TraitScore> current_scores(const UserProfile& profile,
                                             const ThresholdTable& table) const;

  const GoalVocabulary& goals() const { return goals_; }
  void flush() { store_->flush(); }

 private:
  std::mutex& lock_for(const std::string& username) const;
  std::string history_prefix(const std::string& username, Trait trait) const;

  std::shared_ptr<DocumentStore> store_;
  GoalVocabulary goals_;
  mutable std::array<std::mutex, 64> stripes_;
};

}  // namespace eudrec
