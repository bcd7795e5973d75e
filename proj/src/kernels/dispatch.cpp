#include "eudrec/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eudrec::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(EUDREC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* forced = std::getenv("EUDREC_ISA")) {
    const std::string token(forced);
    if (token == "scalar") {
      return Isa::scalar;
    }
    if (token == "avx2" && cpu_has_avx2()) {
      return Isa::avx2;
    }
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{&table_for(initial_isa())};
  return table;
}

std::atomic<Isa>& active_isa_slot() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("kernel operands differ in length: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

const KernelTable& current() { return *active_table().load(std::memory_order_acquire); }

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA not supported on this machine: " + std::string(isa_name(isa)));
  }
#if defined(EUDREC_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) {
    return avx2::kTable;
  }
#endif
  return scalar::kTable;
}

Isa active_isa() { return active_isa_slot().load(std::memory_order_acquire); }

void select_isa(Isa isa) {
  const KernelTable& table = table_for(isa);
  active_table().store(&table, std::memory_order_release);
  active_isa_slot().store(isa, std::memory_order_release);
}

std::uint64_t popcount(std::span<const std::uint64_t> words) {
  return current().popcount(words.data(), words.size());
}

std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  require_same_length(a.size(), b.size());
  return current().and_popcount(a.data(), b.data(), a.size());
}

std::uint64_t or_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  require_same_length(a.size(), b.size());
  return current().or_popcount(a.data(), b.data(), a.size());
}

std::uint64_t xor_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  require_same_length(a.size(), b.size());
  return current().xor_popcount(a.data(), b.data(), a.size());
}

void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  require_same_length(dst.size(), src.size());
  current().and_into(dst.data(), src.data(), dst.size());
}

double sum(std::span<const double> values) { return current().sum(values.data(), values.size()); }

Moments moments(std::span<const double> a, std::span<const double> b) {
  require_same_length(a.size(), b.size());
  return current().moments(a.data(), b.data(), a.size());
}

Moments centered_moments(std::span<const double> a, double mean_a, std::span<const double> b,
                         double mean_b) {
  require_same_length(a.size(), b.size());
  return current().centered_moments(a.data(), mean_a, b.data(), mean_b, a.size());
}

}  // namespace eudrec::kernels
