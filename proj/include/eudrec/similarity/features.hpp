#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eudrec/user_model/profile.hpp"

namespace eudrec {

struct Feature {
  enum class Kind { trait, object, goal, preference };

  Kind kind = Kind::object;
  std::string name;  // trait name, category or goal

  /// "trait:<name>", "object:<category>", "goal:<name>", "preference:<category>"
  std::string id() const;
  bool operator==(const Feature&) const = default;
};

/// Ordered, duplicate-free, non-empty list of features; the order fixes the
/// vector coordinates.
class FeatureSelection {
 public:
  /// Throws ValidationError if `features` is empty or has duplicates.
  explicit FeatureSelection(std::vector<Feature> features);

  /// Parses a comma-separated list. "<kind>:*" expands to every value of that
  /// kind found in `context` (all four traits for "trait:*"), sorted.
  static FeatureSelection parse(std::string_view list, std::span<const UserProfile> context = {});

  const std::vector<Feature>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }

 private:
  std::vector<Feature> features_;
};

struct FeatureVector {
  std::vector<double> coordinates;
  std::vector<bool> present;
};

/// Traits map to their value (absent -> not present), objects and goals to
/// 1/0 (always present), preferences to their level (absent -> not present).
FeatureVector vectorize(const UserProfile& profile, const FeatureSelection& selection);

}  // namespace eudrec
