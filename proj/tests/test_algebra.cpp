#include "oracles.hpp"

#include "pfhpd/schur.hpp"
#include "pfhpd/weights.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pfhpd;

namespace {

oracle::Vec shifted_partition(const DominantWeight& w) {
  oracle::Vec v(w.entries());
  for (auto& x : v) x -= w.last();
  return v;
}

}  // namespace

TEST(Bbw, MatchesHandComputedBottOnAllSmallWeights) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Entry lo = n <= 3 ? -4 : -3, hi = -lo;
    std::vector<Entry> a(n, lo);
    while (true) {
      const auto expected = oracle::bott(a);
      const BBWOutcome got = bbw_reduce(Weight(a));
      ASSERT_EQ(!got.has_value(), expected.zero) << format_weight(a);
      if (got) {
        EXPECT_EQ(got->degree, expected.degree);
        EXPECT_EQ(got->weight.entries(), expected.weight);
        // Degree and Weyl's signed product agree on the Euler characteristic.
        Integer chi = dimension(got->weight);
        if (got->degree % 2) chi = -chi;
        EXPECT_EQ(chi, oracle::weyl_chi(a));
      } else {
        EXPECT_EQ(oracle::weyl_chi(a), 0);
      }
      std::size_t i = 0;
      while (i < n && a[i] == hi) a[i++] = lo;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST(Bbw, ProjectiveLineAgreesWithCechCount) {
  // O(d) on P^1 = Gr(1,2): weight (d, 0) on the flag variety of GL(2).
  for (Entry d = -8; d <= 8; ++d) {
    const auto [h0, h1] = oracle::cech_p1(d);
    const BBWOutcome r = bbw_reduce(Weight({d, 0}));
    if (!r) {
      EXPECT_EQ(h0 + h1, 0) << d;
      continue;
    }
    const Integer dim = dimension(r->weight);
    EXPECT_EQ(r->degree == 0 ? Integer(h0) : Integer(h1), dim) << d;
    EXPECT_EQ(r->degree == 0 ? h1 : h0, 0) << d;
  }
  EXPECT_EQ(oracle::cech_p1(-2), (std::pair<std::int64_t, std::int64_t>(0, 1)));
}

TEST(Bbw, FundamentalWeightsGiveExteriorPowers) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto w = DominantWeight::fundamental(n, k);
      const BBWOutcome r = bbw_reduce(w.weight());
      ASSERT_TRUE(r);
      EXPECT_EQ(r->degree, 0);
      EXPECT_EQ(r->weight, w);
      EXPECT_EQ(dimension(r->weight), oracle::choose(static_cast<std::int64_t>(n), k));
    }
  }
}

TEST(Weights, ParseAndFormat) {
  EXPECT_EQ(parse_weight("1, 0,-2").entries(), (std::vector<Entry>{1, 0, -2}));
  EXPECT_EQ(format_weight(Weight({3, -1})), "3,-1");
  EXPECT_THROW(parse_weight("1,,2"), std::invalid_argument);
  EXPECT_THROW(DominantWeight({0, 1}), std::invalid_argument);
  EXPECT_EQ(dual_weight(DominantWeight({2, 0, -1})), DominantWeight({1, 0, -2}));
}

TEST(Schur, DimensionMatchesTableauCount) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Entry size = 0; size <= 6; ++size) {
      for (const auto& p : oracle::partitions(size, n)) {
        EXPECT_EQ(dimension(DominantWeight(p)), oracle::ssyt_count(p, n));
        EXPECT_EQ(dimension(DominantWeight(p)), oracle::hook_content(p, static_cast<Entry>(n)));
      }
    }
  }
}

TEST(Schur, LittlewoodRichardsonMatchesSchurPolynomialProducts) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (Entry a = 0; a <= 4; ++a) {
      for (Entry b = 0; b <= 3; ++b) {
        for (const auto& l : oracle::partitions(a, n)) {
          for (const auto& m : oracle::partitions(b, n)) {
            const auto expect = oracle::schur_expand(
                oracle::multiply(oracle::schur_poly(l, n), oracle::schur_poly(m, n)), n);
            const VirtualRep got = lr_product(DominantWeight(l), DominantWeight(m));
            std::map<oracle::Vec, oracle::BigInt> got_map;
            for (const auto& [w, c] : got.terms()) got_map[w.entries()] = c;
            EXPECT_EQ(got_map, expect);
          }
        }
      }
    }
  }
}

TEST(Schur, LrHandlesNegativeWeightsThroughDeterminant) {
  // W ⊗ W* = 1 + adjoint for GL(3).
  const VirtualRep r = lr_product(DominantWeight({1, 0, 0}), DominantWeight({0, 0, -1}));
  VirtualRep expected(3);
  expected.add(DominantWeight({0, 0, 0}), 1);
  expected.add(DominantWeight({1, 0, -1}), 1);
  EXPECT_EQ(r, expected);
}

TEST(Schur, RandomLrDimensionsMultiply) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto pick = [&] {
      const auto ps = oracle::partitions(static_cast<Entry>(rng() % 9), n);
      return ps[rng() % ps.size()];
    };
    const auto l = pick(), m = pick();
    const VirtualRep p = lr_product(DominantWeight(l), DominantWeight(m));
    EXPECT_EQ(dimension(p), oracle::hook_content(l, n) * oracle::hook_content(m, n));
  }
}

TEST(Schur, SymmetricPowersOfWedgeTwo) {
  for (std::size_t r = 2; r <= 6; ++r) {
    const Entry big = static_cast<Entry>(r * (r - 1) / 2);
    for (Entry t = 0; t <= 8; ++t) {
      EXPECT_EQ(dimension(sym_power_of_wedge2_rep(t, r)), oracle::choose(big + t - 1, t));
    }
  }
  // S^2(Λ²C^4) = Σ^{2,2} + Σ^{1,1,1,1}.
  VirtualRep expected(4);
  expected.add(DominantWeight({1, 1, 1, 1}), 1);
  expected.add(DominantWeight({2, 2, 0, 0}), 1);
  EXPECT_EQ(sym_power_of_wedge2_rep(2, 4), expected);
}

TEST(Schur, PlethysmDimensionsMatchHookContent) {
  for (std::size_t r = 2; r <= 5; ++r) {
    const std::size_t big = r * (r - 1) / 2;
    for (Entry size = 0; size <= 4; ++size) {
      for (const auto& nu : oracle::partitions(size, big)) {
        const VirtualRep p = schur_of_wedge2(DominantWeight(nu), r);
        EXPECT_TRUE(p.is_nonnegative());
        EXPECT_EQ(dimension(p), oracle::hook_content(nu, static_cast<Entry>(big)));
      }
    }
  }
  // Σ^{(0,...,0,-1)}(Λ²E) = Λ²E* is irreducible.
  const VirtualRep dual = schur_of_wedge2(DominantWeight({0, 0, 0, 0, 0, -1}), 4);
  VirtualRep expected(4);
  expected.add(DominantWeight({0, 0, -1, -1}), 1);
  EXPECT_EQ(dual, expected);
}

TEST(Schur, FormatRep) {
  VirtualRep r(2);
  EXPECT_EQ(format_rep(r), "0");
  r.add(DominantWeight({1, 0}), 2);
  r.add(DominantWeight({0, 0}), -1);
  EXPECT_EQ(format_rep(r), "-S(0,0) + 2 S(1,0)");
}

TEST(Schur, SignSplitAndDual) {
  VirtualRep r(2);
  r.add(DominantWeight({1, 0}), 2);
  r.add(DominantWeight({0, 0}), -1);
  const auto [pos, neg] = r.split_signs();
  EXPECT_EQ(dimension(pos), 4);
  EXPECT_EQ(dimension(neg), 1);
  EXPECT_EQ(dualize(dualize(r)), r);
  EXPECT_EQ(dimension(dualize(r)), dimension(r));
}
