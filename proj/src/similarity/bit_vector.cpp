#include "eudrec/similarity/bit_vector.hpp"

#include <string>

#include "eudrec/error.hpp"

namespace eudrec {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw ValidationError("binary vector element " + std::to_string(i) + " is " +
                            std::to_string(b));
    }
    set(i++, b == 1);
  }
}

BitVector BitVector::from_reals(std::span<const double> values) {
  BitVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    v.set(i, values[i] > 0.0);
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

}  // namespace eudrec
