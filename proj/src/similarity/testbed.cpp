#include "eudrec/similarity/testbed.hpp"

#include <charconv>

#include "eudrec/error.hpp"

namespace eudrec {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string shortest(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

}  // namespace

double compare_vectors(const FeatureVector& a, const FeatureVector& b, Measure measure) {
  if (a.coordinates.size() != b.coordinates.size()) {
    throw ValidationError("feature vectors differ in length");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
    if (a.present[i] && b.present[i]) {
      xs.push_back(a.coordinates[i]);
      ys.push_back(b.coordinates[i]);
    }
  }
  if (xs.empty()) {
    throw UndefinedSimilarityError("the two users share no defined feature");
  }
  switch (measure) {
    case Measure::jaccard:
      return jaccard(BitVector::from_reals(xs), BitVector::from_reals(ys));
    case Measure::simple_matching:
      return simple_matching(BitVector::from_reals(xs), BitVector::from_reals(ys));
    case Measure::cosine:
      return cosine(xs, ys);
    case Measure::pearson:
      return pearson(xs, ys);
  }
  throw ConsistencyError("unhandled measure");
}

double profile_similarity(const UserProfile& a, const UserProfile& b, Measure measure,
                          const FeatureSelection& selection) {
  return compare_vectors(vectorize(a, selection), vectorize(b, selection), measure);
}

double user_similarity(const UserRepository& users, const std::string& user_a,
                       const std::string& user_b, Measure measure,
                       const FeatureSelection& selection) {
  const UserProfile a = users.get_profile(user_a);
  const UserProfile b = users.get_profile(user_b);
  return profile_similarity(a, b, measure, selection);
}

SimilarityMatrix similarity_matrix(const UserRepository& users, Measure measure,
                                   std::string_view feature_list) {
  const std::vector<UserProfile> profiles = users.all_profiles();
  SimilarityMatrix matrix;
  for (const auto& p : profiles) matrix.usernames.push_back(p.username);
  const std::size_t n = profiles.size();
  matrix.cells.assign(n * n, std::nullopt);
  if (n == 0) {
    return matrix;
  }
  const FeatureSelection selection = FeatureSelection::parse(feature_list, profiles);
  std::vector<FeatureVector> vectors;
  vectors.reserve(n);
  for (const auto& p : profiles) vectors.push_back(vectorize(p, selection));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::optional<double> value;
      try {
        value = compare_vectors(vectors[i], vectors[j], measure);
      } catch (const UndefinedSimilarityError&) {
      }
      matrix.cells[i * n + j] = value;
      matrix.cells[j * n + i] = value;
    }
  }
  return matrix;
}

std::string to_csv(const SimilarityMatrix& matrix) {
  std::string out = "username";
  for (const auto& name : matrix.usernames) out += "," + csv_field(name);
  out += "\n";
  const std::size_t n = matrix.usernames.size();
  for (std::size_t i = 0; i < n; ++i) {
    out += csv_field(matrix.usernames[i]);
    for (std::size_t j = 0; j < n; ++j) {
      out += ",";
      if (auto v = matrix.at(i, j)) out += shortest(*v);
    }
    out += "\n";
  }
  return out;
}

}  // namespace eudrec
