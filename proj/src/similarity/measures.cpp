#include "eudrec/similarity/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eudrec/error.hpp"
#include "eudrec/kernels/kernels.hpp"

namespace eudrec {
namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ValidationError("vectors differ in length: " + std::to_string(a) + " vs " +
                          std::to_string(b));
  }
}

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

std::string_view measure_name(Measure measure) {
  switch (measure) {
    case Measure::jaccard:
      return "jaccard";
    case Measure::pearson:
      return "pearson";
    case Measure::cosine:
      return "cosine";
    case Measure::simple_matching:
      return "simple_matching";
  }
  return {};
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : {Measure::jaccard, Measure::pearson, Measure::cosine, Measure::simple_matching}) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

bool is_binary_measure(Measure measure) {
  return measure == Measure::jaccard || measure == Measure::simple_matching;
}

double jaccard(const BitVector& a, const BitVector& b) {
  require_same_length(a.size(), b.size());
  const std::uint64_t united = kernels::or_popcount(a.words(), b.words());
  if (united == 0) {
    return 1.0;
  }
  const std::uint64_t shared = kernels::and_popcount(a.words(), b.words());
  return static_cast<double>(shared) / static_cast<double>(united);
}

double simple_matching(const BitVector& a, const BitVector& b) {
  require_same_length(a.size(), b.size());
  if (a.size() == 0) {
    throw ValidationError("simple matching needs at least one coordinate");
  }
  const std::uint64_t mismatches = kernels::xor_popcount(a.words(), b.words());
  return static_cast<double>(a.size() - mismatches) / static_cast<double>(a.size());
}

double cosine(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  const kernels::Moments m = kernels::moments(a, b);
  if (m.aa == 0.0 || m.bb == 0.0) {
    throw UndefinedSimilarityError("cosine is undefined for a zero vector");
  }
  return std::clamp(m.ab / std::sqrt(m.aa * m.bb), -1.0, 1.0);
}

double pearson(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  if (a.size() < 2) {
    throw UndefinedSimilarityError("pearson needs at least two coordinates");
  }
  if (is_constant(a) || is_constant(b)) {
    throw UndefinedSimilarityError("pearson is undefined for a constant vector");
  }
  const double n = static_cast<double>(a.size());
  const double mean_a = kernels::sum(a) / n;
  const double mean_b = kernels::sum(b) / n;
  const kernels::Moments m = kernels::centered_moments(a, mean_a, b, mean_b);
  if (m.aa == 0.0 || m.bb == 0.0) {
    throw UndefinedSimilarityError("pearson is undefined for a constant vector");
  }
  return std::clamp(m.ab / std::sqrt(m.aa * m.bb), -1.0, 1.0);
}

}  // namespace eudrec
