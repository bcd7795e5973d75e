#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace eudrec {

/// Fixed-length binary vector packed into 64-bit words. Bits past size()
/// are always zero so word-wise kernels need no tail masking.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);
  /// Every element must be 0 or 1 (ValidationError otherwise).
  BitVector(std::initializer_list<int> bits);
  /// Binarizes with "> 0".
  static BitVector from_reals(std::span<const double> values);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace eudrec
