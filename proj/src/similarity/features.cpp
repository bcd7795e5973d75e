#include "eudrec/similarity/features.hpp"

#include <set>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {
namespace {

std::string_view kind_prefix(Feature::Kind kind) {
  switch (kind) {
    case Feature::Kind::trait:
      return "trait";
    case Feature::Kind::object:
      return "object";
    case Feature::Kind::goal:
      return "goal";
    case Feature::Kind::preference:
      return "preference";
  }
  return {};
}

std::optional<Feature::Kind> parse_kind(std::string_view token) {
  for (auto k : {Feature::Kind::trait, Feature::Kind::object, Feature::Kind::goal,
                 Feature::Kind::preference}) {
    if (kind_prefix(k) == token) return k;
  }
  return std::nullopt;
}

std::set<std::string> expand(Feature::Kind kind, std::span<const UserProfile> context) {
  std::set<std::string> names;
  for (const auto& profile : context) {
    switch (kind) {
      case Feature::Kind::object:
        names.insert(profile.owned_objects.begin(), profile.owned_objects.end());
        break;
      case Feature::Kind::goal:
        names.insert(profile.goals.begin(), profile.goals.end());
        break;
      case Feature::Kind::preference:
        for (const auto& [category, level] : profile.object_preferences) names.insert(category);
        break;
      case Feature::Kind::trait:
        break;
    }
  }
  return names;
}

}  // namespace

std::string Feature::id() const { return std::string(kind_prefix(kind)) + ":" + name; }

FeatureSelection::FeatureSelection(std::vector<Feature> features) : features_(std::move(features)) {
  if (features_.empty()) {
    throw ValidationError("feature selection is empty", "features");
  }
  std::set<std::string> seen;
  for (const auto& f : features_) {
    if (!seen.insert(f.id()).second) {
      throw ValidationError("duplicate feature " + f.id(), f.id());
    }
  }
}

FeatureSelection FeatureSelection::parse(std::string_view list,
                                         std::span<const UserProfile> context) {
  std::vector<Feature> features;
  while (true) {
    const std::size_t comma = list.find(',');
    const std::string_view token = trim(list.substr(0, comma));
    if (!token.empty()) {
      const std::size_t colon = token.find(':');
      if (colon == std::string_view::npos) {
        throw ValidationError("feature '" + std::string(token) + "' lacks a kind prefix",
                              std::string(token));
      }
      const auto kind = parse_kind(token.substr(0, colon));
      if (!kind) {
        throw ValidationError("unknown feature kind in '" + std::string(token) + "'",
                              std::string(token));
      }
      const std::string_view name = trim(token.substr(colon + 1));
      if (name == "*") {
        if (*kind == Feature::Kind::trait) {
          for (Trait t : kAllTraits) features.push_back({*kind, std::string(trait_name(t))});
        } else {
          for (const auto& n : expand(*kind, context)) features.push_back({*kind, n});
        }
      } else if (*kind == Feature::Kind::trait) {
        if (!parse_trait(name)) {
          throw ValidationError("unknown trait '" + std::string(name) + "'", std::string(token));
        }
        features.push_back({*kind, std::string(name)});
      } else {
        std::string normalized = normalize_category(name);
        if (normalized.empty()) {
          throw ValidationError("empty feature name in '" + std::string(token) + "'",
                                std::string(token));
        }
        features.push_back({*kind, std::move(normalized)});
      }
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return FeatureSelection(std::move(features));
}

FeatureVector vectorize(const UserProfile& profile, const FeatureSelection& selection) {
  FeatureVector v;
  v.coordinates.reserve(selection.size());
  v.present.reserve(selection.size());
  for (const auto& f : selection.features()) {
    switch (f.kind) {
      case Feature::Kind::trait: {
        const auto it = profile.trait_scores.find(*parse_trait(f.name));
        const bool has = it != profile.trait_scores.end();
        v.coordinates.push_back(has ? it->second.value : 0.0);
        v.present.push_back(has);
        break;
      }
      case Feature::Kind::object:
        v.coordinates.push_back(profile.owned_objects.count(f.name) ? 1.0 : 0.0);
        v.present.push_back(true);
        break;
      case Feature::Kind::goal:
        v.coordinates.push_back(profile.goals.count(f.name) ? 1.0 : 0.0);
        v.present.push_back(true);
        break;
      case Feature::Kind::preference: {
        const auto it = profile.object_preferences.find(f.name);
        const bool has = it != profile.object_preferences.end();
        v.coordinates.push_back(has ? it->second : 0.0);
        v.present.push_back(has);
        break;
      }
    }
  }
  return v;
}

}  // namespace eudrec
