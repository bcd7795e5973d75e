// Compiled with -mavx2 -mpopcnt. Only reached through the dispatcher after
// a runtime CPU check.

#include "eudrec/kernels/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace eudrec::kernels::avx2 {
namespace {

// Nibble lookup popcount (Mula): per-byte counts via two pshufb lookups,
// then horizontal byte sums into 64-bit lanes with psadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline __m256i accumulate(__m256i acc, __m256i v) {
  return _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
}

inline std::uint64_t reduce_u64x4(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline double reduce_f64x4(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::uint64_t popcount_words(const std::uint64_t* words, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = accumulate(acc, load(words + i));
  }
  std::uint64_t total = reduce_u64x4(acc);
  for (; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(words[i]));
  }
  return total;
}

template <typename VecOp, typename WordOp>
std::uint64_t binary_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                              VecOp vec_op, WordOp word_op) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = accumulate(acc, vec_op(load(a + i), load(b + i)));
  }
  std::uint64_t total = reduce_u64x4(acc);
  for (; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(word_op(a[i], b[i])));
  }
  return total;
}

std::uint64_t and_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  return binary_popcount(
      a, b, n, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

std::uint64_t or_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  return binary_popcount(
      a, b, n, [](__m256i x, __m256i y) { return _mm256_or_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  return binary_popcount(
      a, b, n, [](__m256i x, __m256i y) { return _mm256_xor_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x ^ y; });
}

void and_into_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(load(dst + i), load(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) {
    dst[i] &= src[i];
  }
}

double sum_values(const double* values, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(values + i));
  }
  double total = reduce_f64x4(acc);
  for (; i < n; ++i) {
    total += values[i];
  }
  return total;
}

Moments moments_values(const double* a, const double* b, std::size_t n) {
  __m256d ab = _mm256_setzero_pd();
  __m256d aa = _mm256_setzero_pd();
  __m256d bb = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    ab = _mm256_add_pd(ab, _mm256_mul_pd(va, vb));
    aa = _mm256_add_pd(aa, _mm256_mul_pd(va, va));
    bb = _mm256_add_pd(bb, _mm256_mul_pd(vb, vb));
  }
  Moments m{reduce_f64x4(ab), reduce_f64x4(aa), reduce_f64x4(bb)};
  for (; i < n; ++i) {
    m.ab += a[i] * b[i];
    m.aa += a[i] * a[i];
    m.bb += b[i] * b[i];
  }
  return m;
}

Moments centered_moments_values(const double* a, double mean_a, const double* b, double mean_b,
                                std::size_t n) {
  const __m256d ma = _mm256_set1_pd(mean_a);
  const __m256d mb = _mm256_set1_pd(mean_b);
  __m256d ab = _mm256_setzero_pd();
  __m256d aa = _mm256_setzero_pd();
  __m256d bb = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a + i), ma);
    const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b + i), mb);
    ab = _mm256_add_pd(ab, _mm256_mul_pd(da, db));
    aa = _mm256_add_pd(aa, _mm256_mul_pd(da, da));
    bb = _mm256_add_pd(bb, _mm256_mul_pd(db, db));
  }
  Moments m{reduce_f64x4(ab), reduce_f64x4(aa), reduce_f64x4(bb)};
  for (; i < n; ++i) {
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

}  // namespace eudrec::kernels::avx2
