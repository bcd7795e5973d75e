#pragma once

#include <filesystem>
#include <json.hpp>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "eudrec/psychometrics/scoring.hpp"

namespace eudrec {

enum class ExplanationLevel { none, terse, detailed };

std::string_view explanation_level_name(ExplanationLevel level);
std::optional<ExplanationLevel> parse_explanation_level(std::string_view name);

/// Partial settings carried by one policy row.
struct PolicySettings {
  std::optional<std::size_t> max_recommendations;
  std::optional<ExplanationLevel> explanation_level;
};

struct ResolvedPolicy {
  std::size_t max_recommendations = 5;
  ExplanationLevel explanation_level = ExplanationLevel::terse;

  bool operator==(const ResolvedPolicy&) const = default;
};

/// How many recommendations to show and how much to explain, keyed by
/// (trait, label) with a default row.
///
/// Resolution starts from the default row, then applies every row matching
/// one of the user's labels in canonical trait order (selfEfficacy,
/// needForCognition, locusOfControl, mindset); a later row overrides only
/// the fields it sets.
class TailoringPolicy {
 public:
  /// Research placeholders, not findings: needForCognition high -> detailed,
  /// low -> terse; selfEfficacy low -> max 3, high -> max 7; default max 5,
  /// terse.
  static TailoringPolicy defaults();

  // {"default": {"max_recommendations": 5, "explanation_level": "terse"},
  //  "rows": [{"trait": "needForCognition", "label": "high",
  //            "explanation_level": "detailed"}, ...]}
  // Throws LoadError with the JSON path of the offending entry.
  static TailoringPolicy from_json(const nlohmann::json& doc);
  static TailoringPolicy load_file(const std::filesystem::path& path);

  explicit TailoringPolicy(ResolvedPolicy default_row);
  void set_row(Trait trait, Band band, PolicySettings settings);

  ResolvedPolicy resolve(const std::map<Trait, TraitScore>& scores) const;
  const ResolvedPolicy& default_row() const { return default_row_; }

 private:
  ResolvedPolicy default_row_;
  std::map<std::pair<Trait, Band>, PolicySettings> rows_;
};

}  // namespace eudrec
