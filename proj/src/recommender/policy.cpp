#include "eudrec/recommender/policy.hpp"

#include <string>

#include "eudrec/error.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

using nlohmann::json;

namespace {

PolicySettings parse_settings(const json& entry, const std::string& where) {
  PolicySettings s;
  if (entry.contains("max_recommendations")) {
    const json& v = entry.at("max_recommendations");
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw LoadError(where + ".max_recommendations: expected a positive integer");
    }
    s.max_recommendations = v.get<std::size_t>();
  }
  if (entry.contains("explanation_level")) {
    const json& v = entry.at("explanation_level");
    const auto level = v.is_string() ? parse_explanation_level(v.get<std::string>()) : std::nullopt;
    if (!level) {
      throw LoadError(where + ".explanation_level: expected none, terse or detailed");
    }
    s.explanation_level = level;
  }
  return s;
}

}  // namespace

std::string_view explanation_level_name(ExplanationLevel level) {
  switch (level) {
    case ExplanationLevel::none:
      return "none";
    case ExplanationLevel::terse:
      return "terse";
    case ExplanationLevel::detailed:
      return "detailed";
  }
  return {};
}

std::optional<ExplanationLevel> parse_explanation_level(std::string_view name) {
  for (auto level : {ExplanationLevel::none, ExplanationLevel::terse, ExplanationLevel::detailed}) {
    if (explanation_level_name(level) == name) return level;
  }
  return std::nullopt;
}

TailoringPolicy::TailoringPolicy(ResolvedPolicy default_row) : default_row_(default_row) {
  if (default_row_.max_recommendations == 0) {
    throw ValidationError("max_recommendations must be positive");
  }
}

TailoringPolicy TailoringPolicy::defaults() {
  TailoringPolicy policy({5, ExplanationLevel::terse});
  policy.set_row(Trait::need_for_cognition, Band::high_pole, {std::nullopt, ExplanationLevel::detailed});
  policy.set_row(Trait::need_for_cognition, Band::low_pole, {std::nullopt, ExplanationLevel::terse});
  policy.set_row(Trait::self_efficacy, Band::low_pole, {3, std::nullopt});
  policy.set_row(Trait::self_efficacy, Band::high_pole, {7, std::nullopt});
  return policy;
}

void TailoringPolicy::set_row(Trait trait, Band band, PolicySettings settings) {
  if (settings.max_recommendations && *settings.max_recommendations == 0) {
    throw ValidationError("max_recommendations must be positive");
  }
  rows_[{trait, band}] = settings;
}

ResolvedPolicy TailoringPolicy::resolve(const std::map<Trait, TraitScore>& scores) const {
  ResolvedPolicy out = default_row_;
  for (Trait trait : kAllTraits) {
    auto score = scores.find(trait);
    if (score == scores.end()) continue;
    const auto band = parse_band_label(trait, score->second.label);
    if (!band) continue;
    auto row = rows_.find({trait, *band});
    if (row == rows_.end()) continue;
    if (row->second.max_recommendations) out.max_recommendations = *row->second.max_recommendations;
    if (row->second.explanation_level) out.explanation_level = *row->second.explanation_level;
  }
  return out;
}

TailoringPolicy TailoringPolicy::from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("default")) {
    throw LoadError("policy: missing 'default' row");
  }
  const PolicySettings base = parse_settings(doc.at("default"), "policy.default");
  if (!base.max_recommendations || !base.explanation_level) {
    throw LoadError("policy.default: must set max_recommendations and explanation_level");
  }
  TailoringPolicy policy({*base.max_recommendations, *base.explanation_level});
  if (!doc.contains("rows")) {
    return policy;
  }
  const json& rows = doc.at("rows");
  if (!rows.is_array()) {
    throw LoadError("policy.rows: expected an array");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "policy.rows[" + std::to_string(i) + "]";
    const json& row = rows[i];
    if (!row.is_object() || !row.contains("trait") || !row.contains("label") ||
        !row.at("trait").is_string() || !row.at("label").is_string()) {
      throw LoadError(where + ": needs string fields 'trait' and 'label'");
    }
    const auto trait = parse_trait(row.at("trait").get<std::string>());
    if (!trait) {
      throw LoadError(where + ".trait: unknown trait");
    }
    const auto band = parse_band_label(*trait, row.at("label").get<std::string>());
    if (!band) {
      throw LoadError(where + ".label: not a label of " + std::string(trait_name(*trait)));
    }
    policy.set_row(*trait, *band, parse_settings(row, where));
  }
  return policy;
}

TailoringPolicy TailoringPolicy::load_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    throw LoadError(e.what());
  }
  try {
    return from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

}  // namespace eudrec
