#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eudrec/rule_mining/dataset.hpp"

namespace eudrec {

using Itemset = std::vector<std::string>;  // sorted ascending, no duplicates

struct FrequentItemset {
  Itemset items;
  std::size_t count = 0;  // transactions containing the itemset
  double support = 0.0;   // count / transaction_count
};

struct FrequentItemsets {
  std::size_t transaction_count = 0;
  double min_support = 0.0;
  /// Ordered by size, then lexicographically.
  std::vector<FrequentItemset> itemsets;

  const FrequentItemset* find(const Itemset& items) const;

  /// Builds the lookup index; apriori() calls it before returning.
  void reindex();

 private:
  std::map<Itemset, std::size_t> index_;
};

/// Level-wise Apriori over bitmap tid-lists. Exactly the itemsets whose
/// support is >= min_support. Throws ValidationError when min_support is
/// outside (0, 1] or `transactions` is empty.
FrequentItemsets apriori(std::span<const Transaction> transactions, double min_support);

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  double support = 0.0;      // of antecedent + consequent
  double confidence = 0.0;   // count / antecedent_count
  std::size_t count = 0;
  std::size_t antecedent_count = 0;
};

/// Every rule A -> (I \ A) over frequent itemsets I of size >= 2 with
/// confidence >= min_confidence, computed from the table alone. Throws
/// ValidationError for min_confidence outside (0, 1] and ConsistencyError
/// when a subset is missing from the table.
std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent, double min_confidence);

}  // namespace eudrec
