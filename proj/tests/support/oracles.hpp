#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain loops over std::set and brute-force enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using ItemSet = std::set<std::string>;

struct Itemset {
  ItemSet items;
  std::size_t count = 0;
  double support = 0.0;
};

struct Rule {
  ItemSet antecedent;
  ItemSet consequent;
  std::size_t count = 0;
  std::size_t antecedent_count = 0;
  double support = 0.0;
  double confidence = 0.0;
};

inline std::size_t count_containing(const std::vector<ItemSet>& transactions, const ItemSet& items) {
  std::size_t n = 0;
  for (const auto& t : transactions) {
    if (std::includes(t.begin(), t.end(), items.begin(), items.end())) ++n;
  }
  return n;
}

// Every non-empty subset of the item universe, kept when count / n reaches
// min_support. Exponential in the universe size; fine up to ~16 items.
inline std::map<ItemSet, Itemset> frequent_itemsets(const std::vector<ItemSet>& transactions,
                                                    double min_support) {
  ItemSet universe;
  for (const auto& t : transactions) universe.insert(t.begin(), t.end());
  const std::vector<std::string> items(universe.begin(), universe.end());
  const double n = static_cast<double>(transactions.size());
  std::map<ItemSet, Itemset> out;
  for (std::uint32_t mask = 1; mask < (1U << items.size()); ++mask) {
    ItemSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (1U << i)) s.insert(items[i]);
    }
    const std::size_t c = count_containing(transactions, s);
    const double support = static_cast<double>(c) / n;
    if (c > 0 && support >= min_support) out[s] = Itemset{s, c, support};
  }
  return out;
}

inline std::vector<Rule> rules(const std::vector<ItemSet>& transactions, double min_support,
                               double min_confidence) {
  const auto frequent = frequent_itemsets(transactions, min_support);
  std::vector<Rule> out;
  for (const auto& [items, fi] : frequent) {
    if (items.size() < 2) continue;
    const std::vector<std::string> v(items.begin(), items.end());
    for (std::uint32_t mask = 1; mask + 1 < (1U << v.size()); ++mask) {
      ItemSet a;
      ItemSet c;
      for (std::size_t i = 0; i < v.size(); ++i) (mask & (1U << i) ? a : c).insert(v[i]);
      const std::size_t ac = count_containing(transactions, a);
      const double conf = static_cast<double>(fi.count) / static_cast<double>(ac);
      if (conf >= min_confidence) out.push_back(Rule{a, c, fi.count, ac, fi.support, conf});
    }
  }
  return out;
}

// Set arithmetic over the indices of the 1-bits.
inline std::set<std::size_t> ones(const std::vector<int>& bits) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s.insert(i);
  }
  return s;
}

inline double jaccard(const std::vector<int>& a, const std::vector<int>& b) {
  const auto sa = ones(a);
  const auto sb = ones(b);
  std::set<std::size_t> inter;
  std::set<std::size_t> uni;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(inter, inter.end()));
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(uni, uni.end()));
  if (uni.empty()) return 1.0;
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

inline double simple_matching(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) agree += (a[i] == b[i]);
  return static_cast<double>(agree) / static_cast<double>(a.size());
}

inline long double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  long double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += static_cast<long double>(a[i]) * b[i];
    aa += static_cast<long double>(a[i]) * a[i];
    bb += static_cast<long double>(b[i]) * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

inline long double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Mean Likert score computed the long way: flip negative answers, average.
inline double likert_mean(const std::vector<int>& answers, const std::vector<bool>& negative,
                          int points) {
  long total = 0;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    total += negative[i] ? (points + 1 - answers[i]) : answers[i];
  }
  return static_cast<double>(total) / static_cast<double>(answers.size());
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<int> bits(Rng& rng, std::size_t n) {
  std::vector<int> v(n);
  for (auto& b : v) b = uniform_int(rng, 0, 1);
  return v;
}

// Reals with a mix of zeros, negatives and repeats so the set measures and
// the "> 0" binarization both get exercised.
inline std::vector<double> reals(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) {
    switch (uniform_int(rng, 0, 4)) {
      case 0: x = 0.0; break;
      case 1: x = static_cast<double>(uniform_int(rng, 1, 5)); break;
      case 2: x = -uniform_real(rng, 0.0, 3.0); break;
      default: x = uniform_real(rng, -5.0, 5.0); break;
    }
  }
  return v;
}

// Up to `max_transactions` transactions over items "i0".."i<max_items-1>",
// each non-empty.
inline std::vector<std::set<std::string>> transactions(Rng& rng, int max_transactions, int max_items) {
  const int n = uniform_int(rng, 1, max_transactions);
  const int universe = uniform_int(rng, 1, max_items);
  const double density = uniform_real(rng, 0.15, 0.8);
  std::vector<std::set<std::string>> out(static_cast<std::size_t>(n));
  for (auto& t : out) {
    for (int i = 0; i < universe; ++i) {
      if (uniform_real(rng, 0.0, 1.0) < density) t.insert("i" + std::to_string(i));
    }
    if (t.empty()) t.insert("i" + std::to_string(uniform_int(rng, 0, universe - 1)));
  }
  return out;
}

}  // namespace gen
