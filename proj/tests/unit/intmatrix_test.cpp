#include <random>

#include <gtest/gtest.h>

#include "cext/intmatrix.hpp"

namespace cext {
namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % 9) - 4;
  }
  return m;
}

TEST(Smith, KnownExample) {
  IntMatrix m(3, 3);
  const long long v[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  }
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(s.rank, 3u);
}

TEST(Smith, TransformsReproduceTheDiagonal) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const IntMatrix a = random_matrix(r, c, rng);
    const SmithForm s = smith_normal_form(a, {true, true});
    const IntMatrix d = s.p * a * s.q;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const Integer expected = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
        EXPECT_EQ(d(i, j), expected);
      }
    }
    EXPECT_EQ(s.p * s.p_inv, IntMatrix::identity(r));
    EXPECT_EQ(s.q * s.q_inv, IntMatrix::identity(c));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    EXPECT_EQ(integer_rank(a), s.rank);
  }
}

TEST(Smith, ZeroMatrix) {
  const SmithForm s = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(s.rank, 0u);
  EXPECT_TRUE(IntMatrix(2, 3).is_zero());
}

}  // namespace
}  // namespace cext
