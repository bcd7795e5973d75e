#include "eudrec/rule_mining/apriori.hpp"

#include <cmath>
#include <cstdint>
#include <set>

#include "eudrec/error.hpp"
#include "eudrec/kernels/kernels.hpp"

namespace eudrec {
namespace {

using ItemId = std::uint32_t;
using Bitmap = std::vector<std::uint64_t>;

void require_unit_interval(double value, const char* name) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in (0, 1], got " + std::to_string(value),
                          name);
  }
}

// Frequent itemsets of one size, in lexicographic id order, each with the
// bitmap of transactions that contain it.
struct Level {
  std::vector<std::vector<ItemId>> sets;
  std::vector<Bitmap> bitmaps;
  std::vector<std::size_t> counts;
};

bool shares_prefix(const std::vector<ItemId>& a, const std::vector<ItemId>& b) {
  return std::equal(a.begin(), a.end() - 1, b.begin());
}

}  // namespace

const FrequentItemset* FrequentItemsets::find(const Itemset& items) const {
  auto it = index_.find(items);
  return it == index_.end() ? nullptr : &itemsets[it->second];
}

void FrequentItemsets::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < itemsets.size(); ++i) {
    index_.emplace(itemsets[i].items, i);
  }
}

FrequentItemsets apriori(std::span<const Transaction> transactions, double min_support) {
  require_unit_interval(min_support, "min_support");
  if (transactions.empty()) {
    throw ValidationError("apriori needs at least one transaction");
  }
  const std::size_t n = transactions.size();
  const std::size_t words = (n + 63) / 64;

  // Ids follow byte order of the item strings, so id order == string order.
  std::map<std::string, ItemId> ids;
  for (const auto& t : transactions) {
    for (const auto& item : t.items) ids.emplace(item, 0);
  }
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (auto& [name, id] : ids) {
    id = static_cast<ItemId>(names.size());
    names.push_back(name);
  }
  std::vector<Bitmap> item_bits(names.size(), Bitmap(words, 0));
  for (std::size_t tid = 0; tid < n; ++tid) {
    for (const auto& item : transactions[tid].items) {
      item_bits[ids.at(item)][tid / 64] |= std::uint64_t{1} << (tid % 64);
    }
  }

  const auto is_frequent = [&](std::size_t count) {
    return static_cast<double>(count) / static_cast<double>(n) >= min_support;
  };

  FrequentItemsets result;
  result.transaction_count = n;
  result.min_support = min_support;
  const auto emit = [&](const Level& level) {
    for (std::size_t i = 0; i < level.sets.size(); ++i) {
      Itemset items;
      for (ItemId id : level.sets[i]) items.push_back(names[id]);
      result.itemsets.push_back(
          {std::move(items), level.counts[i],
           static_cast<double>(level.counts[i]) / static_cast<double>(n)});
    }
  };

  Level current;
  for (ItemId id = 0; id < names.size(); ++id) {
    const std::size_t count = kernels::popcount(item_bits[id]);
    if (is_frequent(count)) {
      current.sets.push_back({id});
      current.bitmaps.push_back(item_bits[id]);
      current.counts.push_back(count);
    }
  }
  emit(current);

  while (current.sets.size() >= 2) {
    const std::set<std::vector<ItemId>> previous(current.sets.begin(), current.sets.end());
    Level next;
    for (std::size_t i = 0; i < current.sets.size(); ++i) {
      const auto& left = current.sets[i];
      for (std::size_t j = i + 1; j < current.sets.size() && shares_prefix(left, current.sets[j]);
           ++j) {
        const ItemId last = current.sets[j].back();
        std::vector<ItemId> candidate = left;
        candidate.push_back(last);

        // Subsets dropping either of the last two items are left and
        // current.sets[j]; check the rest.
        bool pruned = false;
        for (std::size_t drop = 0; drop + 2 < candidate.size() && !pruned; ++drop) {
          std::vector<ItemId> subset;
          subset.reserve(candidate.size() - 1);
          for (std::size_t p = 0; p < candidate.size(); ++p) {
            if (p != drop) subset.push_back(candidate[p]);
          }
          pruned = previous.count(subset) == 0;
        }
        if (pruned) continue;

        const std::size_t count = kernels::and_popcount(current.bitmaps[i], item_bits[last]);
        if (!is_frequent(count)) continue;
        Bitmap bits = current.bitmaps[i];
        kernels::and_into(bits, item_bits[last]);
        next.sets.push_back(std::move(candidate));
        next.bitmaps.push_back(std::move(bits));
        next.counts.push_back(count);
      }
    }
    emit(next);
    current = std::move(next);
  }
  result.reindex();
  return result;
}

std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent,
                                            double min_confidence) {
  require_unit_interval(min_confidence, "min_confidence");
  std::vector<AssociationRule> rules;
  for (const auto& itemset : frequent.itemsets) {
    const std::size_t k = itemset.items.size();
    if (k < 2) continue;
    if (k >= 63) {
      throw ConsistencyError("itemset too large for rule enumeration");
    }
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      Itemset antecedent;
      Itemset consequent;
      for (std::size_t p = 0; p < k; ++p) {
        ((mask >> p) & 1U ? antecedent : consequent).push_back(itemset.items[p]);
      }
      const FrequentItemset* base = frequent.find(antecedent);
      if (base == nullptr) {
        throw ConsistencyError("frequent itemset table is not downward closed");
      }
      const double confidence =
          static_cast<double>(itemset.count) / static_cast<double>(base->count);
      if (confidence >= min_confidence) {
        rules.push_back({std::move(antecedent), std::move(consequent), itemset.support, confidence,
                         itemset.count, base->count});
      }
    }
  }
  return rules;
}

}  // namespace eudrec
