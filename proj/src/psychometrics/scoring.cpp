#include "eudrec/psychometrics/scoring.hpp"

#include "eudrec/error.hpp"

namespace eudrec {

double score_responses(const Questionnaire& questionnaire, const ResponseSet& responses) {
  if (questionnaire.trait != responses.trait) {
    throw ValidationError("responses are for " + std::string(trait_name(responses.trait)) +
                          " but the questionnaire measures " +
                          std::string(trait_name(questionnaire.trait)));
  }
  if (questionnaire.items.empty()) {
    throw ValidationError("questionnaire for " + std::string(trait_name(questionnaire.trait)) +
                          " has no items");
  }
  for (const auto& [id, answer] : responses.answers) {
    if (questionnaire.find_item(id) == nullptr) {
      throw ValidationError("unknown item " + id, id);
    }
  }
  const int points = questionnaire.scale_points;
  long long total = 0;
  for (const auto& item : questionnaire.items) {
    auto it = responses.answers.find(item.id);
    if (it == responses.answers.end()) {
      throw ValidationError("missing answer for item " + item.id, item.id);
    }
    const int raw = it->second;
    if (raw < 1 || raw > points) {
      throw ValidationError("answer " + std::to_string(raw) + " for item " + item.id +
                                " is outside 1.." + std::to_string(points),
                            item.id);
    }
    total += item.keying == Keying::positive ? raw : points + 1 - raw;
  }
  return static_cast<double>(total) / static_cast<double>(questionnaire.items.size());
}

Band classify_band(double value, const TraitThresholds& thresholds) {
  if (value < thresholds.medium_low) return Band::low_pole;
  if (value > thresholds.medium_high) return Band::high_pole;
  return Band::medium;
}

std::string classify(double value, const TraitThresholds& thresholds) {
  return std::string(band_label(thresholds.trait, classify_band(value, thresholds)));
}

TraitScore score_and_classify(const Questionnaire& questionnaire, const ResponseSet& responses,
                              const TraitThresholds& thresholds) {
  if (thresholds.trait != questionnaire.trait) {
    throw ValidationError("thresholds are for " + std::string(trait_name(thresholds.trait)));
  }
  const double value = score_responses(questionnaire, responses);
  return TraitScore{questionnaire.trait, value, classify(value, thresholds)};
}

}  // namespace eudrec
