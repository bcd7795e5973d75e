#include "eudrec/psychometrics/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eudrec/error.hpp"

namespace eudrec {

void TraitThresholds::validate(int scale_points) const {
  if (!(medium_low >= 1.0 && medium_low <= medium_high &&
        medium_high <= static_cast<double>(scale_points))) {
    throw ValidationError("invalid thresholds for " + std::string(trait_name(trait)) + ": [" +
                          std::to_string(medium_low) + ", " + std::to_string(medium_high) + "]");
  }
}

double percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw ValidationError("percentile of an empty sample");
  }
  const double pos = std::clamp(p, 0.0, 100.0) / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

ThresholdTable ThresholdTable::defaults() {
  ThresholdTable table;
  table.set_fixed({Trait::self_efficacy, 3.52, 3.96});
  table.set_fixed({Trait::need_for_cognition, 3.46, 3.98});
  table.set_fixed({Trait::locus_of_control, 2.885, 3.615});
  table.set_derived(Trait::mindset, PercentileBand{});
  return table;
}

ThresholdTable ThresholdTable::from_json(const nlohmann::json& doc) {
  ThresholdTable table = defaults();
  if (doc.is_null()) {
    return table;
  }
  if (!doc.is_object()) {
    throw LoadError("thresholds: expected an object");
  }
  for (const auto& [key, entry] : doc.items()) {
    const auto trait = parse_trait(key);
    if (!trait) {
      throw LoadError("thresholds: unknown trait '" + key + "'");
    }
    try {
      if (entry.contains("medium_low") || entry.contains("medium_high")) {
        TraitThresholds t{*trait, entry.at("medium_low").get<double>(),
                          entry.at("medium_high").get<double>()};
        t.validate();
        table.set_fixed(t);
      } else {
        PercentileBand band;
        if (entry.contains("percentiles")) {
          band.lower_percentile = entry.at("percentiles").at(0).get<double>();
          band.upper_percentile = entry.at("percentiles").at(1).get<double>();
        }
        if (entry.contains("min_samples")) {
          band.min_samples = entry.at("min_samples").get<std::size_t>();
        }
        if (entry.contains("fallback")) {
          band.fallback_low = entry.at("fallback").at(0).get<double>();
          band.fallback_high = entry.at("fallback").at(1).get<double>();
        }
        if (!(0.0 <= band.lower_percentile && band.lower_percentile <= band.upper_percentile &&
              band.upper_percentile <= 100.0)) {
          throw ValidationError("percentiles must satisfy 0 <= lower <= upper <= 100");
        }
        TraitThresholds{*trait, band.fallback_low, band.fallback_high}.validate();
        table.set_derived(*trait, band);
      }
    } catch (const nlohmann::json::exception& e) {
      throw LoadError("thresholds." + key + ": " + e.what());
    } catch (const ValidationError& e) {
      throw LoadError("thresholds." + key + ": " + e.what());
    }
  }
  return table;
}

void ThresholdTable::set_fixed(TraitThresholds thresholds) {
  derived_.erase(thresholds.trait);
  fixed_[thresholds.trait] = thresholds;
}

void ThresholdTable::set_derived(Trait trait, PercentileBand band) {
  fixed_.erase(trait);
  derived_[trait] = band;
}

bool ThresholdTable::is_derived(Trait trait) const { return derived_.count(trait) != 0; }

TraitThresholds ThresholdTable::resolve(Trait trait, std::span<const double> stored_values) const {
  if (auto it = fixed_.find(trait); it != fixed_.end()) {
    return it->second;
  }
  auto it = derived_.find(trait);
  if (it == derived_.end()) {
    throw ConsistencyError("no thresholds configured for " + std::string(trait_name(trait)));
  }
  const PercentileBand& band = it->second;
  if (stored_values.size() < band.min_samples || stored_values.empty()) {
    return {trait, band.fallback_low, band.fallback_high};
  }
  std::vector<double> sorted(stored_values.begin(), stored_values.end());
  std::sort(sorted.begin(), sorted.end());
  return {trait, percentile(sorted, band.lower_percentile),
          percentile(sorted, band.upper_percentile)};
}

}  // namespace eudrec
