#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "eudrec/similarity/bit_vector.hpp"

namespace eudrec {

enum class Measure { jaccard, pearson, cosine, simple_matching };

std::string_view measure_name(Measure measure);
std::optional<Measure> parse_measure(std::string_view name);
/// True for the set measures, which binarize real coordinates with "> 0".
bool is_binary_measure(Measure measure);

/// |a AND b| / |a OR b|. Two all-zero vectors are identical sets and score
/// 1.0. Throws ValidationError on a length mismatch.
double jaccard(const BitVector& a, const BitVector& b);

/// Fraction of positions where a and b agree (both 1 or both 0). Throws
/// ValidationError on a length mismatch or empty vectors.
double simple_matching(const BitVector& a, const BitVector& b);

/// dot(a, b) / (|a| |b|). Throws UndefinedSimilarityError when either
/// vector is all zeros, ValidationError on a length mismatch.
double cosine(std::span<const double> a, std::span<const double> b);

/// Sample correlation coefficient. Throws UndefinedSimilarityError when the
/// length is below 2 or either vector is constant.
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace eudrec
