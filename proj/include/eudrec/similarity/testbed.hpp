#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eudrec/similarity/features.hpp"
#include "eudrec/similarity/measures.hpp"
#include "eudrec/user_model/repository.hpp"

namespace eudrec {

/// Applies `measure` to the coordinates present in both vectors. Set
/// measures binarize with "> 0". Throws UndefinedSimilarityError when no
/// shared coordinate remains or the measure itself is undefined.
double compare_vectors(const FeatureVector& a, const FeatureVector& b, Measure measure);

double profile_similarity(const UserProfile& a, const UserProfile& b, Measure measure,
                          const FeatureSelection& selection);

/// Looks both users up (NotFoundError if missing), then profile_similarity.
double user_similarity(const UserRepository& users, const std::string& user_a,
                       const std::string& user_b, Measure measure,
                       const FeatureSelection& selection);

struct SimilarityMatrix {
  std::vector<std::string> usernames;
  /// Row-major, usernames.size() squared; nullopt where undefined.
  std::vector<std::optional<double>> cells;

  std::optional<double> at(std::size_t row, std::size_t col) const {
    return cells[row * usernames.size() + col];
  }
};

/// All stored users against each other. Wildcards in `feature_list` expand
/// over every stored profile. Symmetric by construction.
SimilarityMatrix similarity_matrix(const UserRepository& users, Measure measure,
                                   std::string_view feature_list);

/// CSV: header "username,<u1>,...", one row per user, undefined cells empty,
/// values in shortest round-trip form.
std::string to_csv(const SimilarityMatrix& matrix);

}  // namespace eudrec
