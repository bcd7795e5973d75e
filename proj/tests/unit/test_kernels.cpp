#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "eudrec/kernels/kernels.hpp"
#include "eudrec/similarity/bit_vector.hpp"
#include "eudrec/similarity/measures.hpp"
#include "support/oracles.hpp"

using namespace eudrec;
namespace k = eudrec::kernels;

namespace {

std::vector<std::uint64_t> random_words(gen::Rng& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

void expect_close(double a, double b) {
  EXPECT_NEAR(a, b, 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)}));
}

class IsaGuard {
 public:
  IsaGuard() : saved_(k::active_isa()) {}
  ~IsaGuard() { k::select_isa(saved_); }

 private:
  k::Isa saved_;
};

}  // namespace

TEST(Kernels, ScalarAlwaysSupported) {
  EXPECT_TRUE(k::isa_supported(k::Isa::scalar));
  EXPECT_EQ(k::isa_name(k::Isa::scalar), "scalar");
  EXPECT_EQ(k::isa_name(k::Isa::avx2), "avx2");
}

TEST(Kernels, ScalarReferenceOnKnownInputs) {
  const auto& t = k::scalar::kTable;
  const std::uint64_t a[] = {0xFF, 0x0F, ~0ULL};
  const std::uint64_t b[] = {0x0F, 0xF0, 0};
  EXPECT_EQ(t.popcount(a, 3), 8U + 4U + 64U);
  EXPECT_EQ(t.and_popcount(a, b, 3), 4U);
  EXPECT_EQ(t.or_popcount(a, b, 3), 8U + 8U + 64U);
  EXPECT_EQ(t.xor_popcount(a, b, 3), 4U + 8U + 64U);
  const double x[] = {1, 2, 3};
  const double y[] = {3, 2, 1};
  EXPECT_DOUBLE_EQ(t.sum(x, 3), 6.0);
  const k::Moments m = t.moments(x, y, 3);
  EXPECT_DOUBLE_EQ(m.ab, 10.0);
  EXPECT_DOUBLE_EQ(m.aa, 14.0);
  EXPECT_DOUBLE_EQ(m.bb, 14.0);
  const k::Moments c = t.centered_moments(x, 2.0, y, 2.0, 3);
  EXPECT_DOUBLE_EQ(c.ab, -2.0);
  EXPECT_DOUBLE_EQ(c.aa, 2.0);
}

TEST(Kernels, UnequalSpansRejected) {
  const std::vector<std::uint64_t> a(3), b(4);
  EXPECT_THROW(k::and_popcount(a, b), std::invalid_argument);
  const std::vector<double> x(2), y(3);
  EXPECT_THROW(k::moments(x, y), std::invalid_argument);
}

#if defined(EUDREC_HAVE_AVX2_KERNELS)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!k::isa_supported(k::Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  }
};

TEST_F(Avx2Equivalence, BitmapKernelsMatchScalarExactly) {
  const auto& s = k::scalar::kTable;
  const auto& v = k::avx2::kTable;
  gen::Rng rng(11);
  // Lengths straddle the 4-word vector width and its tails.
  for (std::size_t n = 0; n <= 70; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_words(rng, n);
      const auto b = random_words(rng, n);
      ASSERT_EQ(s.popcount(a.data(), n), v.popcount(a.data(), n)) << n;
      ASSERT_EQ(s.and_popcount(a.data(), b.data(), n), v.and_popcount(a.data(), b.data(), n)) << n;
      ASSERT_EQ(s.or_popcount(a.data(), b.data(), n), v.or_popcount(a.data(), b.data(), n)) << n;
      ASSERT_EQ(s.xor_popcount(a.data(), b.data(), n), v.xor_popcount(a.data(), b.data(), n)) << n;
      auto d1 = a;
      auto d2 = a;
      s.and_into(d1.data(), b.data(), n);
      v.and_into(d2.data(), b.data(), n);
      ASSERT_EQ(d1, d2) << n;
    }
  }
}

TEST_F(Avx2Equivalence, PopcountMatchesStdPopcount) {
  gen::Rng rng(12);
  const auto w = random_words(rng, 37);
  std::uint64_t expected = 0;
  for (auto x : w) expected += static_cast<std::uint64_t>(std::popcount(x));
  EXPECT_EQ(k::avx2::kTable.popcount(w.data(), w.size()), expected);
}

TEST_F(Avx2Equivalence, FloatKernelsMatchScalarWithinRounding) {
  const auto& s = k::scalar::kTable;
  const auto& v = k::avx2::kTable;
  gen::Rng rng(13);
  for (std::size_t n = 0; n <= 67; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = gen::reals(rng, n);
      const auto b = gen::reals(rng, n);
      expect_close(s.sum(a.data(), n), v.sum(a.data(), n));
      const auto m1 = s.moments(a.data(), b.data(), n);
      const auto m2 = v.moments(a.data(), b.data(), n);
      expect_close(m1.ab, m2.ab);
      expect_close(m1.aa, m2.aa);
      expect_close(m1.bb, m2.bb);
      const auto c1 = s.centered_moments(a.data(), 0.25, b.data(), -0.5, n);
      const auto c2 = v.centered_moments(a.data(), 0.25, b.data(), -0.5, n);
      expect_close(c1.ab, c2.ab);
      expect_close(c1.aa, c2.aa);
      expect_close(c1.bb, c2.bb);
    }
  }
}

TEST_F(Avx2Equivalence, MeasuresAgreeAcrossIsas) {
  IsaGuard guard;
  gen::Rng rng(14);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 300));
    const auto a = gen::reals(rng, n);
    const auto b = gen::reals(rng, n);
    const BitVector ba = BitVector::from_reals(a);
    const BitVector bb = BitVector::from_reals(b);
    k::select_isa(k::Isa::scalar);
    const double j1 = jaccard(ba, bb);
    const double s1 = simple_matching(ba, bb);
    k::select_isa(k::Isa::avx2);
    EXPECT_EQ(j1, jaccard(ba, bb));
    EXPECT_EQ(s1, simple_matching(ba, bb));
  }
}

TEST_F(Avx2Equivalence, SelectIsaSwitchesActiveVariant) {
  IsaGuard guard;
  k::select_isa(k::Isa::scalar);
  EXPECT_EQ(k::active_isa(), k::Isa::scalar);
  k::select_isa(k::Isa::avx2);
  EXPECT_EQ(k::active_isa(), k::Isa::avx2);
}

#endif
