#pragma once

#include <json.hpp>
#include <map>
#include <span>
#include <vector>

#include "eudrec/psychometrics/trait.hpp"

namespace eudrec {

/// The closed interval [medium_low, medium_high] is the medium band.
struct TraitThresholds {
  Trait trait = Trait::self_efficacy;
  double medium_low = 0.0;
  double medium_high = 0.0;

  /// Requires 1 <= medium_low <= medium_high <= scale_points.
  void validate(int scale_points = 5) const;
  bool operator==(const TraitThresholds&) const = default;
};

/// Medium band derived from the stored score distribution: the
/// [lower, upper] percentiles of stored values, or `fallback` while fewer
/// than `min_samples` scores exist.
struct PercentileBand {
  double lower_percentile = 33.0;
  double upper_percentile = 67.0;
  std::size_t min_samples = 30;
  double fallback_low = 2.5;
  double fallback_high = 3.5;
};

/// Linear interpolation between closest ranks; `sorted` must be ascending
/// and non-empty, `p` in [0, 100].
double percentile(std::span<const double> sorted, double p);

class ThresholdTable {
 public:
  /// Fixed bands for selfEfficacy [3.52, 3.96], needForCognition
  /// [3.46, 3.98], locusOfControl [2.885, 3.615]; mindset derived with the
  /// default PercentileBand.
  static ThresholdTable defaults();

  /// Object keyed by trait name. Each entry is either
  ///   {"medium_low": x, "medium_high": y}                   (fixed band)
  /// or {"percentiles": [p, q], "min_samples": n, "fallback": [x, y]}.
  /// Traits not mentioned keep their default. Throws LoadError.
  static ThresholdTable from_json(const nlohmann::json& doc);

  void set_fixed(TraitThresholds thresholds);
  void set_derived(Trait trait, PercentileBand band);

  /// True when resolve() for `trait` depends on stored scores.
  bool is_derived(Trait trait) const;

  /// Band for `trait`. `stored_values` is consulted only for derived traits.
  TraitThresholds resolve(Trait trait, std::span<const double> stored_values = {}) const;

 private:
  std::map<Trait, TraitThresholds> fixed_;
  std::map<Trait, PercentileBand> derived_;
};

}  // namespace eudrec
