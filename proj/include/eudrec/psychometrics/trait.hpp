#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace eudrec {

enum class Trait { self_efficacy, need_for_cognition, locus_of_control, mindset };

/// Canonical order (declaration order). Tailoring rows apply in this order.
inline constexpr std::array<Trait, 4> kAllTraits{Trait::self_efficacy, Trait::need_for_cognition,
                                                 Trait::locus_of_control, Trait::mindset};

/// Order in which traits appear in API response bodies: alphabetical by
/// serialized name.
inline constexpr std::array<Trait, 4> kSerializationOrder{
    Trait::locus_of_control, Trait::mindset, Trait::need_for_cognition, Trait::self_efficacy};

/// JSON name: "selfEfficacy", "needForCognition", "locusOfControl", "mindset".
std::string_view trait_name(Trait trait);
std::optional<Trait> parse_trait(std::string_view name);

/// Name of the range field in the values response, e.g. "rangeLocusOfControl".
std::string_view range_field_name(Trait trait);

/// Position of a value relative to the medium band.
enum class Band { low_pole = 0, medium = 1, high_pole = 2 };

/// low/medium/high for selfEfficacy and needForCognition,
/// external/medium/internal for locusOfControl, fixed/medium/growth for mindset.
std::string_view band_label(Trait trait, Band band);
std::optional<Band> parse_band_label(Trait trait, std::string_view label);

}  // namespace eudrec
