#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eudrec/psychometrics/trait.hpp"
#include "eudrec/text.hpp"

namespace eudrec {

enum class Keying { positive, negative };

struct QuestionnaireItem {
  std::string id;
  std::string text;
  Keying keying = Keying::positive;
};

struct Questionnaire {
  Trait trait = Trait::self_efficacy;
  std::vector<QuestionnaireItem> items;
  int scale_points = 5;

  /// Throws ValidationError on empty/duplicate item ids or scale_points < 2.
  void validate() const;
  const QuestionnaireItem* find_item(std::string_view id) const;
};

/// A user's Likert answers to one questionnaire, item id -> answer.
struct ResponseSet {
  std::string username;
  Trait trait = Trait::self_efficacy;
  std::map<std::string, int> answers;
  Timestamp submitted_at{};
};

/// The loaded questionnaires, at most one per trait.
class QuestionnaireBank {
 public:
  QuestionnaireBank() = default;

  /// Throws ValidationError if `q` is invalid or its trait is already present.
  void add(Questionnaire q);
  const Questionnaire* find(Trait trait) const;
  std::size_t size() const { return by_trait_.size(); }
  bool empty() const { return by_trait_.empty(); }
  const std::map<Trait, Questionnaire>& all() const { return by_trait_; }

 private:
  std::map<Trait, Questionnaire> by_trait_;
};

// Definition documents are JSON:
//
//   {"questionnaires": [
//     {"trait": "selfEfficacy", "scale_points": 5,
//      "items": [{"id": "se01", "text": "...", "keying": "positive"}, ...]}]}
//
// `scale_points` defaults to 5; keying is "positive"/"negative" (or "+"/"-").
// An empty or whitespace-only document yields an empty bank. Errors raise
// LoadError whose message starts with "<source>: <json path>".
QuestionnaireBank load_questionnaires(std::string_view document, std::string_view source = "<memory>");
QuestionnaireBank load_questionnaires_file(const std::filesystem::path& path);

}  // namespace eudrec
