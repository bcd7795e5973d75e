#include "eudrec/psychometrics/trait.hpp"

namespace eudrec {

std::string_view trait_name(Trait trait) {
  switch (trait) {
    case Trait::self_efficacy:
      return "selfEfficacy";
    case Trait::need_for_cognition:
      return "needForCognition";
    case Trait::locus_of_control:
      return "locusOfControl";
    case Trait::mindset:
      return "mindset";
  }
  return {};
}

std::optional<Trait> parse_trait(std::string_view name) {
  for (Trait t : kAllTraits) {
    if (trait_name(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

std::string_view range_field_name(Trait trait) {
  switch (trait) {
    case Trait::self_efficacy:
      return "rangeSelfEfficacy";
    case Trait::need_for_cognition:
      return "rangeNeedForCognition";
    case Trait::locus_of_control:
      return "rangeLocusOfControl";
    case Trait::mindset:
      return "rangeMindset";
  }
  return {};
}

std::string_view band_label(Trait trait, Band band) {
  if (band == Band::medium) {
    return "medium";
  }
  const bool low = band == Band::low_pole;
  switch (trait) {
    case Trait::locus_of_control:
      return low ? "external" : "internal";
    case Trait::mindset:
      return low ? "fixed" : "growth";
    case Trait::self_efficacy:
    case Trait::need_for_cognition:
      break;
  }
  return low ? "low" : "high";
}

std::optional<Band> parse_band_label(Trait trait, std::string_view label) {
  for (Band b : {Band::low_pole, Band::medium, Band::high_pole}) {
    if (band_label(trait, b) == label) {
      return b;
    }
  }
  return std::nullopt;
}

}  // namespace eudrec
