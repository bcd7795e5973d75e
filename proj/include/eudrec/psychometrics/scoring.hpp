#pragma once

#include <string>

#include "eudrec/psychometrics/questionnaire.hpp"
#include "eudrec/psychometrics/thresholds.hpp"

namespace eudrec {

struct TraitScore {
  Trait trait = Trait::self_efficacy;
  double value = 0.0;
  std::string label;

  bool operator==(const TraitScore&) const = default;
};

/// Mean of effective answers, where a negatively keyed answer r counts as
/// (scale_points + 1 - r). The result lies in [1, scale_points].
///
/// Throws ValidationError (subject = item id) on a missing, unknown or
/// out-of-range answer, and on a trait mismatch.
double score_responses(const Questionnaire& questionnaire, const ResponseSet& responses);

/// Low pole below medium_low, medium on the closed band, high pole above.
Band classify_band(double value, const TraitThresholds& thresholds);
std::string classify(double value, const TraitThresholds& thresholds);

/// score_responses + classify in one step.
TraitScore score_and_classify(const Questionnaire& questionnaire, const ResponseSet& responses,
                              const TraitThresholds& thresholds);

}  // namespace eudrec
