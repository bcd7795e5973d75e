#pragma once

// Data-parallel inner loops shared by the similarity measures and the
// Apriori support counter. Each kernel has a scalar reference and, on
// x86-64, an AVX2 variant. The active variant is chosen once at startup
// from CPU detection, or forced with EUDREC_ISA=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace eudrec::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();

/// Switches every dispatched kernel to `isa`. Throws std::invalid_argument if
/// the CPU (or the build) does not support it. Not meant to race with kernel
/// calls; tests call it between phases.
void select_isa(Isa isa);

/// Pairwise sums of products: sum(a*b), sum(a*a), sum(b*b).
struct Moments {
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
};

// Bitmap kernels. Spans of unequal length are an error (std::invalid_argument).
std::uint64_t popcount(std::span<const std::uint64_t> words);
std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t or_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
std::uint64_t xor_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

// Floating-point reductions.
double sum(std::span<const double> values);
Moments moments(std::span<const double> a, std::span<const double> b);
/// Moments of (a - mean_a) and (b - mean_b), centered lane by lane.
Moments centered_moments(std::span<const double> a, double mean_a,
                         std::span<const double> b, double mean_b);

// Raw per-ISA entry points, exposed for equivalence testing.
struct KernelTable {
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t n);
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  std::uint64_t (*or_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  std::uint64_t (*xor_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  double (*sum)(const double* values, std::size_t n);
  Moments (*moments)(const double* a, const double* b, std::size_t n);
  Moments (*centered_moments)(const double* a, double mean_a, const double* b, double mean_b,
                              std::size_t n);
};

/// Table for `isa`; throws std::invalid_argument when unsupported.
const KernelTable& table_for(Isa isa);

namespace scalar {
extern const KernelTable kTable;
}  // namespace scalar

#if defined(EUDREC_HAVE_AVX2_KERNELS)
namespace avx2 {
extern const KernelTable kTable;
}  // namespace avx2
#endif

}  // namespace eudrec::kernels
