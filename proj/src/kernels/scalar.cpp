#include "eudrec/kernels/kernels.hpp"

#include <bit>

namespace eudrec::kernels::scalar {
namespace {

std::uint64_t popcount_words(const std::uint64_t* words, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(words[i]));
  }
  return total;
}

std::uint64_t and_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

std::uint64_t or_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(a[i] | b[i]));
  }
  return total;
}

std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  }
  return total;
}

void and_into_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] &= src[i];
  }
}

double sum_values(const double* values, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += values[i];
  }
  return total;
}

Moments moments_values(const double* a, const double* b, std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    m.ab += a[i] * b[i];
    m.aa += a[i] * a[i];
    m.bb += b[i] * b[i];
  }
  return m;
}

Moments centered_moments_values(const double* a, double mean_a, const double* b, double mean_b,
                                std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    m.ab += da * db;
    m.aa += da * da;
    m.bb += db * db;
  }
  return m;
}

}  // namespace

const KernelTable kTable{
    popcount_words,  and_popcount_words, or_popcount_words,      xor_popcount_words,
    and_into_words,  sum_values,         moments_values,         centered_moments_values,
};

}  // namespace eudrec::kernels::scalar
