#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "gwp/error.hpp"
#include "gwp/nc_lattice.hpp"
#include "oracles.hpp"

using namespace gwp;

namespace {

std::vector<std::string> strs(const std::vector<NCPartition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

TEST(EnumerateNC, Examples) {
  EXPECT_EQ(strs(enumerate_nc(1)), std::vector<std::string>{"{{1}}"});
  EXPECT_EQ(strs(enumerate_nc(2)), (std::vector<std::string>{"{{1,2}}", "{{1},{2}}"}));
  EXPECT_EQ(enumerate_nc(3).size(), 5u);
}

TEST(EnumerateNC, CountsAreCatalan) {
  auto c = oracle::catalan_segner(14);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(BigInt(enumerate_nc(n).size()), c[n]) << n;
}

TEST(EnumerateNC, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> ours, brute;
    for (const auto& p : enumerate_nc(n)) ours.insert(p.str());
    for (const auto& b : oracle::brute_force_nc(n)) brute.insert(NCPartition::from_blocks(n, b).str());
    EXPECT_EQ(ours, brute) << n;
    EXPECT_EQ(ours.size(), enumerate_nc(n).size()) << "duplicates at n=" << n;
  }
}

TEST(EnumerateNC, GuardAboveMaxOrder) {
  EXPECT_THROW(enumerate_nc(kMaxNCOrder + 1), LimitError);
  EXPECT_THROW(enumerate_nc(0), Error);
}

TEST(EnumerateNCPairings, Examples) {
  EXPECT_EQ(strs(enumerate_nc_pairings(2)), std::vector<std::string>{"{{1,2}}"});
  EXPECT_EQ(strs(enumerate_nc_pairings(4)), (std::vector<std::string>{"{{1,2},{3,4}}", "{{1,4},{2,3}}"}));
  EXPECT_EQ(enumerate_nc_pairings(6).size(), 5u);
  EXPECT_THROW(enumerate_nc_pairings(5), DomainError);
}

TEST(EnumerateNCPairings, CountsAreCatalanAndOrderMatchesNC) {
  auto c = oracle::catalan_segner(14);
  for (std::size_t k = 1; k <= 6; ++k) {
    auto pairs = enumerate_nc_pairings(2 * k);
    EXPECT_EQ(BigInt(pairs.size()), c[k]);
    std::vector<NCPartition> filtered;
    for (const auto& p : enumerate_nc(2 * k))
      if (p.is_pairing()) filtered.push_back(p);
    EXPECT_EQ(pairs, filtered);
  }
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(6), 132);
  auto c = oracle::catalan_segner(40);
  for (std::size_t k = 0; k <= 40; ++k) EXPECT_EQ(catalan(k), c[k]);
}

TEST(NCPartition, FromBlocksValidates) {
  EXPECT_THROW(NCPartition::from_blocks(4, {{1, 3}, {2, 4}}), DomainError);
  EXPECT_THROW(NCPartition::from_blocks(3, {{1, 2}}), DomainError);
  EXPECT_THROW(NCPartition::from_blocks(3, {{1, 2}, {2, 3}}), DomainError);
  NCPartition p = NCPartition::from_blocks(4, {{2, 3}, {4, 1}});
  EXPECT_EQ(p.str(), "{{1,4},{2,3}}");
  EXPECT_EQ(p.block_of(3), 1u);
}

TEST(Kreweras, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(kreweras(NCPartition::discrete(n)), NCPartition::full(n));
    EXPECT_EQ(kreweras(NCPartition::full(n)), NCPartition::discrete(n));
  }
  EXPECT_EQ(kreweras(NCPartition::from_blocks(3, {{1, 2}, {3}})).str(), "{{1},{2,3}}");
}

TEST(Kreweras, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      NCPartition expected = NCPartition::from_blocks(n, oracle::brute_force_kreweras(p.blocks(), n));
      EXPECT_EQ(kreweras(p), expected) << p.str();
    }
  }
}

TEST(Kreweras, SizeIdentityAndBijection) {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::set<NCPartition> image;
    for_each_nc(n, [&](const NCPartition& p) {
      NCPartition k = kreweras(p);
      EXPECT_EQ(p.block_count() + k.block_count(), n + 1);
      image.insert(k);
    });
    EXPECT_EQ(BigInt(image.size()), catalan(n));
  }
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius_to_top(NCPartition::full(4)), 1);
  EXPECT_EQ(mobius_to_top(NCPartition::discrete(2)), -1);
  EXPECT_EQ(mobius_to_top(NCPartition::discrete(3)), 2);
}

TEST(Mobius, DefiningIdentity) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto all = enumerate_nc(n);
    for (const auto& p : all) {
      BigInt s = 0;
      for (const auto& sigma : all)
        if (p.refines(sigma)) s += mobius_to_top(sigma);
      EXPECT_EQ(s, p.block_count() == 1 ? 1 : 0) << p.str();
    }
  }
}

TEST(Mobius, FactorizedEqualsRecursive) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& [p, mu] : oracle::recursive_mobius(n)) EXPECT_EQ(mobius_to_top(p), mu) << p.str();
  }
}

TEST(NCTable, MatchesEnumerationAndMobius) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto& table = nc_table(n);
    auto all = enumerate_nc(n);
    ASSERT_EQ(table.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(table[i].partition, all[i]);
      EXPECT_EQ(BigInt(table[i].mobius), mobius_to_top(all[i]));
    }
  }
}

TEST(MomentsToCumulants, Examples) {
  auto seq = [](std::initializer_list<int> xs) {
    std::vector<Scalar> out;
    for (int x : xs) out.emplace_back(x);
    return out;
  };
  EXPECT_EQ(moments_to_cumulants(seq({0, 1, 0, 2})), seq({0, 1, 0, 0}));
  EXPECT_EQ(moments_to_cumulants(seq({5})), seq({5}));
  EXPECT_EQ(moments_to_cumulants(seq({0, 2, 0, 8, 0, 40})), seq({0, 2, 0, 0, 0, 0}));
  EXPECT_EQ(cumulants_to_moments(seq({0, 3, 0, 0, 0, 0})).back(), Scalar(135));
  EXPECT_EQ(cumulants_to_moments(seq({1})), seq({1}));
}

TEST(MomentsToCumulants, MatchesFunctionalRelation) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> m;
    std::vector<Scalar> ms;
    for (int i = 0; i < 8; ++i) {
      m.push_back(gwp::testing::random_rational(rng, 9));
      ms.emplace_back(m.back());
    }
    auto k = moments_to_cumulants(ms);
    auto expected = oracle::functional_cumulants(m);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(k[i], Scalar(expected[i]));
  }
}

TEST(MomentsToCumulants, RoundTrip) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Scalar> m;
    for (int i = 0; i < 8; ++i) m.emplace_back(gwp::testing::random_rational(rng, 20));
    EXPECT_EQ(cumulants_to_moments(moments_to_cumulants(m)), m);
    EXPECT_EQ(moments_to_cumulants(cumulants_to_moments(m)), m);
  }
}
