// Algebraic identities over the admissible family: exhaustive up to bound
// 40 plus random samples drawn across the full field cap.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bidouble/search.hpp"
#include "bidouble/topology.hpp"
#include "oracles.hpp"

using namespace bidouble;

namespace {

constexpr std::int64_t kExhaustiveBound = 40;
constexpr std::size_t kRandomSamples = 100'000;

// Every admissible type up to the bound, both members of each swap orbit.
std::vector<CoverType> exhaustive_types() {
  std::vector<CoverType> out;
  for (const auto& q : oracle::admissible_modulo_swap(kExhaustiveBound)) {
    const CoverType t{q[0], q[1], q[2], q[3]};
    out.push_back(t);
    if (swap_branch_data(t) != t) out.push_back(swap_branch_data(t));
  }
  return out;
}

// (large, small) with small >= 3, large > 2 small, same parity, large <= cap.
std::pair<std::int64_t, std::int64_t> random_branch_pair(std::mt19937_64& rng, std::int64_t cap) {
  const std::int64_t small = std::uniform_int_distribution<std::int64_t>(3, (cap - 1) / 2 - 1)(rng);
  const std::int64_t first = 2 * small + (small % 2 == 0 ? 2 : 1);
  const std::int64_t steps = (cap - first) / 2;
  const std::int64_t large = first + 2 * std::uniform_int_distribution<std::int64_t>(0, steps)(rng);
  return {large, small};
}

std::vector<CoverType> random_types() {
  std::mt19937_64 rng(0xb1d0b1e);
  std::vector<CoverType> out;
  out.reserve(kRandomSamples);
  const std::int64_t cap = Limits{}.field_cap;
  for (std::size_t i = 0; i < kRandomSamples; ++i) {
    const auto [a, n2] = random_branch_pair(rng, cap);
    const auto [m2, b] = random_branch_pair(rng, cap);
    out.push_back({a, b, m2, n2});
  }
  return out;
}

void check_identities(const CoverType& t) {
  ASSERT_NO_THROW(validate_type(t)) << to_string(t);
  const auto p = derive_params(t);
  const auto inv = surface_invariants(t);

  EXPECT_EQ(p.u % 2, 0);
  EXPECT_EQ(p.v % 2, 0);
  EXPECT_EQ(p.w % 2, 0);
  EXPECT_EQ(p.z % 2, 0);
  EXPECT_GE(p.u, 8);
  EXPECT_GE(p.v, 8);
  EXPECT_GE(p.w, 4);
  EXPECT_GE(p.z, 4);

  EXPECT_EQ(inv.kk, 8 * p.u * p.v);
  EXPECT_EQ(inv.kk % 32, 0);
  EXPECT_EQ(12 * inv.chi, inv.kk + inv.euler);
  EXPECT_EQ(inv.chi, oracle::chi_polynomial(t.a, t.b, t.m2, t.n2)) << to_string(t);
  EXPECT_GT(inv.kk, 0);
  EXPECT_GT(inv.chi, 0);
  EXPECT_GT(inv.euler, 0);

  EXPECT_EQ(inv.b_plus + inv.b_minus, inv.b2);
  EXPECT_EQ(inv.b_plus - inv.b_minus, inv.sigma);
  EXPECT_EQ(inv.b_plus % 2, 1);
  EXPECT_GT(inv.b_plus, 0);

  EXPECT_EQ(inv.r, std::gcd(p.u, p.v));
  EXPECT_EQ(inv.r % 2, 0);
  EXPECT_EQ(p.u % inv.r, 0);
  EXPECT_EQ(p.v % inv.r, 0);

  const CoverType s = swap_branch_data(t);
  EXPECT_TRUE(is_admissible(s));
  EXPECT_EQ(surface_invariants(s), inv);
  const auto ps = derive_params(s);
  EXPECT_EQ(ps.u, p.v);
  EXPECT_EQ(ps.w, p.z);

  const CoverType c = canonicalize(t);
  EXPECT_EQ(canonicalize(c), c);
  EXPECT_EQ(canonicalize(s), c);
  EXPECT_TRUE(c == t || c == s);
  EXPECT_LE(c, t);
}

}  // namespace

TEST(Properties, ExhaustiveIdentities) {
  const auto types = exhaustive_types();
  ASSERT_GT(types.size(), 1000u);
  for (const auto& t : types) {
    check_identities(t);
    if (::testing::Test::HasFailure()) break;
  }
}

TEST(Properties, RandomIdentities) {
  for (const auto& t : random_types()) {
    check_identities(t);
    if (::testing::Test::HasFailure()) break;
  }
}

TEST(Properties, SignatureNegativeUpToForty) {
  for (const auto& t : exhaustive_types()) {
    EXPECT_LT(surface_invariants(t).sigma, 0) << to_string(t);
  }
}

TEST(Properties, HomeomorphismIsAnEquivalenceRelation) {
  const auto types = enumerate_admissible(kExhaustiveBound);
  std::vector<SurfaceInvariants> invs;
  for (const auto& t : types) invs.push_back(surface_invariants(t));

  std::vector<std::vector<std::size_t>> related(invs.size());
  for (std::size_t i = 0; i < invs.size(); ++i) {
    ASSERT_TRUE(are_homeomorphic(invs[i], invs[i]));
    for (std::size_t j = i + 1; j < invs.size(); ++j) {
      const bool ij = are_homeomorphic(invs[i], invs[j]);
      ASSERT_EQ(ij, are_homeomorphic(invs[j], invs[i]));
      if (ij) {
        related[i].push_back(j);
        related[j].push_back(i);
        ASSERT_EQ(diffeo_obstruction(invs[i], invs[j]), diffeo_obstruction(invs[j], invs[i]));
      }
    }
  }
  std::size_t triples = 0;
  for (std::size_t y = 0; y < invs.size(); ++y) {
    for (const auto x : related[y]) {
      for (const auto z : related[y]) {
        ASSERT_TRUE(are_homeomorphic(invs[x], invs[z]));
        ++triples;
      }
    }
  }
  EXPECT_GT(triples, 0u);
}

TEST(Properties, CataneseVerdictIgnoresOrderAndRepresentative) {
  SearchConfig cfg;
  cfg.bound = 50;
  cfg.k = 3;
  auto tuples = search(cfg).tuples;
  ASSERT_FALSE(tuples.empty());

  // Add non-Catanese triples so both verdicts are exercised.
  const auto types = enumerate_admissible(30);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  for (int i = 0; i < 200; ++i) {
    tuples.push_back({{}, {types[pick(rng)], types[pick(rng)], types[pick(rng)]}, {}});
  }

  std::size_t positive = 0;
  for (auto& tuple : tuples) {
    auto members = tuple.members;
    std::sort(members.begin(), members.end());
    const auto base = is_catanese_tuple(members);
    positive += base.is_catanese ? 1 : 0;
    auto sorted_indices = base.indices;
    std::sort(sorted_indices.begin(), sorted_indices.end());
    do {
      for (unsigned flips = 0; flips < 8; ++flips) {
        auto variant = members;
        for (std::size_t i = 0; i < variant.size(); ++i) {
          if (flips >> i & 1) variant[i] = swap_branch_data(variant[i]);
        }
        const auto v = is_catanese_tuple(variant);
        ASSERT_EQ(v.is_catanese, base.is_catanese);
        auto idx = v.indices;
        std::sort(idx.begin(), idx.end());
        ASSERT_EQ(idx, sorted_indices);
      }
    } while (std::next_permutation(members.begin(), members.end()));
  }
  EXPECT_GT(positive, 0u);
  EXPECT_LT(positive, tuples.size());
}
