// Copyright 2026 The mpha Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "mpha/matrix.hpp"
#include "mpha/weight.hpp"

namespace mpha {
namespace {

const ExtendedWeight e = kEps;

TropicalMatrix MuA() { return {{e, 1, 3}, {e, e, 4}, {e, e, e}}; }
TropicalMatrix MuB() { return {{e, e, e}, {2, 1, e}, {7, 5, 1}}; }

ExtendedWeight RandomWeight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int p = pick(rng);
  if (p == 0) return kEps;
  if (p == 1) return kTop;
  return static_cast<double>(std::uniform_int_distribution<int>(-50, 50)(rng));
}

TEST(WeightTest, OplusIsMax) {
  EXPECT_EQ(oplus(kEps, 3), ExtendedWeight(3));
  EXPECT_EQ(oplus(2, 5), ExtendedWeight(5));
  EXPECT_EQ(oplus(kTop, kEps), kTop);
}

TEST(WeightTest, OtimesPrefersEpsilon) {
  EXPECT_EQ(otimes(2, 3), ExtendedWeight(5));
  EXPECT_EQ(otimes(kEps, kTop), kEps);
  EXPECT_EQ(otimes(kTop, kEps), kEps);
  for (ExtendedWeight x : {kEps, kTop, ExtendedWeight(-4), ExtendedWeight(7)})
    EXPECT_EQ(otimes(kUnit, x), x);
}

TEST(WeightTest, DualOperations) {
  EXPECT_EQ(oplus_dual(kTop, 3), ExtendedWeight(3));
  EXPECT_EQ(oplus_dual(2, 5), ExtendedWeight(2));
  EXPECT_EQ(otimes_dual(kTop, kEps), kTop);
  EXPECT_EQ(otimes_dual(kEps, kTop), kTop);
  EXPECT_EQ(otimes_dual(2, 3), ExtendedWeight(5));
}

TEST(WeightTest, NanIsRejected) {
  EXPECT_THROW(ExtendedWeight(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST(WeightTest, TextRoundTrip) {
  for (ExtendedWeight w : {kEps, kTop, ExtendedWeight(0), ExtendedWeight(-2.5), ExtendedWeight(12)})
    EXPECT_EQ(parse_weight(to_string(w)), w);
  EXPECT_EQ(to_string(kEps), "-inf");
  EXPECT_EQ(to_string(kTop), "+inf");
  EXPECT_EQ(to_string(ExtendedWeight(14)), "14");
  EXPECT_EQ(parse_weight("eps"), kEps);
  EXPECT_THROW(parse_weight("x"), Error);
}

TEST(SemiringLawsTest, MaxPlusOnSampledTriples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedWeight a = RandomWeight(rng), b = RandomWeight(rng), c = RandomWeight(rng);
    EXPECT_EQ(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
    EXPECT_EQ(oplus(a, b), oplus(b, a));
    EXPECT_EQ(oplus(a, a), a);
    EXPECT_EQ(otimes(otimes(a, b), c), otimes(a, otimes(b, c)));
    EXPECT_EQ(otimes(a, oplus(b, c)), oplus(otimes(a, b), otimes(a, c)));
    EXPECT_EQ(otimes(oplus(b, c), a), oplus(otimes(b, a), otimes(c, a)));
    EXPECT_EQ(oplus(kEps, a), a);
    EXPECT_EQ(otimes(kEps, a), kEps);
    EXPECT_EQ(otimes(a, kEps), kEps);
    EXPECT_EQ(otimes(kUnit, a), a);
  }
}

TEST(SemiringLawsTest, MinPlusOnSampledTriples) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedWeight a = RandomWeight(rng), b = RandomWeight(rng), c = RandomWeight(rng);
    EXPECT_EQ(oplus_dual(oplus_dual(a, b), c), oplus_dual(a, oplus_dual(b, c)));
    EXPECT_EQ(oplus_dual(a, b), oplus_dual(b, a));
    EXPECT_EQ(otimes_dual(otimes_dual(a, b), c), otimes_dual(a, otimes_dual(b, c)));
    EXPECT_EQ(otimes_dual(a, oplus_dual(b, c)), oplus_dual(otimes_dual(a, b), otimes_dual(a, c)));
    EXPECT_EQ(oplus_dual(kTop, a), a);
    EXPECT_EQ(otimes_dual(kTop, a), kTop);
    EXPECT_EQ(otimes_dual(kUnit, a), a);
  }
}

TEST(SemiringLawsTest, MinMaxDistribution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedWeight a = RandomWeight(rng), b = RandomWeight(rng), c = RandomWeight(rng);
    EXPECT_EQ(oplus(a, oplus_dual(b, c)), oplus_dual(oplus(a, b), oplus(a, c)));
  }
}

TEST(MatrixTest, ProductExamples) {
  EXPECT_EQ(mat_otimes(MuA(), MuA()), (TropicalMatrix{{e, e, 5}, {e, e, e}, {e, e, e}}));
  EXPECT_EQ(mat_otimes(MuA(), TropicalMatrix::epsilon(3, 3)), TropicalMatrix::epsilon(3, 3));
  EXPECT_EQ(mat_otimes(TropicalMatrix::row({0, e, e}), MuB()), TropicalMatrix::epsilon(1, 3));
  EXPECT_EQ(mat_otimes(MuB(), TropicalMatrix::identity(3)), MuB());
  EXPECT_THROW(mat_otimes(MuA(), TropicalMatrix(2, 2)), ShapeError);
}

TEST(MatrixTest, PowerAndSum) {
  EXPECT_TRUE(is_all_epsilon(mat_power(MuA(), 3)));
  EXPECT_NE(mat_power(MuA(), 2), mat_power(MuA(), 3));
  EXPECT_EQ(mat_power(MuB(), 1), MuB());
  EXPECT_EQ(mat_oplus(MuB(), MuB()), MuB());
  EXPECT_THROW(mat_power(MuA(), 0), ShapeError);
  EXPECT_THROW(mat_oplus(MuA(), TropicalMatrix(3, 2)), ShapeError);
}

TEST(MatrixTest, ProductIsAssociative) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> v(-5, 9);
  auto random = [&] {
    TropicalMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const int x = v(rng);
        m(i, j) = x < -2 ? kEps : ExtendedWeight(x);
      }
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random(), b = random(), c = random();
    EXPECT_EQ(mat_otimes(mat_otimes(a, b), c), mat_otimes(a, mat_otimes(b, c)));
  }
}

TEST(MatrixTest, DualProducts) {
  const TropicalMatrix a{{1, kTop}, {0, 2}};
  const TropicalMatrix b{{3, 0}, {kTop, 1}};
  EXPECT_EQ(mat_otimes_dual(a, b), (TropicalMatrix{{4, 1}, {3, 0}}));
  EXPECT_EQ(mat_oplus_dual(a, b), (TropicalMatrix{{1, 0}, {0, 1}}));
}

TEST(OrderTest, LeqExamples) {
  EXPECT_TRUE(leq({e, 1}, {0, 1}));
  EXPECT_FALSE(leq({2, 1}, {0, 3}));
  EXPECT_THROW(leq({1}, {1, 2}), ShapeError);
}

TEST(OrderTest, LeqMatchesOplusOrder) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Vector x(3), y(3);
    for (auto& w : x) w = RandomWeight(rng);
    for (auto& w : y) w = RandomWeight(rng);
    EXPECT_EQ(leq(x, y), vec_oplus(x, y) == y);
    EXPECT_TRUE(leq(x, vec_oplus(x, y)));
  }
}

TEST(SupportTest, Examples) {
  EXPECT_EQ(boolean_support(MuA()), (TropicalMatrix{{e, 0, 0}, {e, e, 0}, {e, e, e}}));
  EXPECT_EQ(boolean_support(TropicalMatrix::epsilon(2, 2)), TropicalMatrix::epsilon(2, 2));
  EXPECT_FALSE(has_finite_entry({e, kTop}));
  EXPECT_TRUE(has_finite_entry({e, 0}));
  EXPECT_TRUE(is_all_epsilon(mat_power(MuA(), 3)));
}

TEST(SupportTest, SupportCommutesWithProductWithoutTop) {
  const std::vector<ExtendedWeight> values{kEps, 0, 1};
  std::vector<TropicalMatrix> all;
  for (int code = 0; code < 81; ++code) {
    TropicalMatrix m(2, 2);
    int c = code;
    for (std::size_t k = 0; k < 4; ++k, c /= 3) m(k / 2, k % 2) = values[c % 3];
    all.push_back(m);
  }
  for (const auto& a : all)
    for (const auto& b : all)
      ASSERT_EQ(boolean_support(mat_otimes(a, b)),
                mat_otimes(boolean_support(a), boolean_support(b)));
}

// Length-k walk existence by explicit frontier expansion.
bool WalkExists(const TropicalMatrix& a, std::size_t i, std::size_t j, std::size_t k) {
  std::set<std::size_t> frontier{i};
  for (std::size_t step = 0; step < k; ++step) {
    std::set<std::size_t> next;
    for (auto s : frontier)
      for (std::size_t t = 0; t < a.cols(); ++t)
        if (!a(s, t).is_epsilon()) next.insert(t);
    frontier = std::move(next);
  }
  return frontier.count(j) > 0;
}

TEST(SupportTest, PowersMatchWalksOnAllSmallBooleanMatrices) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t cells = n * n;
    for (std::uint32_t code = 0; code < (1u << cells); ++code) {
      TropicalMatrix a(n, n);
      for (std::size_t c = 0; c < cells; ++c)
        if (code & (1u << c)) a(c / n, c % n) = kUnit;
      TropicalMatrix p = a;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) p = mat_otimes(p, a);
        const TropicalMatrix s = boolean_support(p);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            ASSERT_EQ(!s(i, j).is_epsilon(), WalkExists(a, i, j, k))
                << "n=" << n << " code=" << code << " k=" << k;
      }
    }
  }
}

TEST(SupportTest, WeightedPowersOnFiveByFive) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> v(-3, 6);
  for (int trial = 0; trial < 200; ++trial) {
    TropicalMatrix a(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const int x = v(rng);
        a(i, j) = x < 1 ? kEps : ExtendedWeight(x);
      }
    for (std::size_t k = 1; k <= 5; ++k) {
      const TropicalMatrix s = boolean_support(mat_power(a, k));
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          ASSERT_EQ(!s(i, j).is_epsilon(), WalkExists(a, i, j, k));
    }
  }
}

TEST(MatrixTest, VectorProducts) {
  EXPECT_EQ(otimes(Vector{0, e, e}, MuA()), (Vector{e, 1, 3}));
  EXPECT_EQ(otimes(MuA().transpose(), Vector{0, e, e}), (Vector{e, 1, 3}));
  EXPECT_EQ(dot(Vector{10, 8, 4}, Vector{2, e, e}), ExtendedWeight(12));
}

}  // namespace
}  // namespace mpha
