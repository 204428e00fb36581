#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "bidouble/discriminant.hpp"
#include "bidouble/errors.hpp"

using namespace bidouble;

namespace {

const CoverType kFirst{16, 22, 52, 4};
const CoverType kSecond{28, 10, 28, 10};

BigInt big(const char* s) { return BigInt{s}; }

}  // namespace

// A smooth cubic surface (e = 9) projected from a general point: degree-3
// cover of the plane, ramified along a plane section of genus 4, branched
// along a sextic with 6 cusps and no nodes.
TEST(CuspCount, CubicSurfaceProjection) {
  EXPECT_EQ(cusp_count_general(3, 4, 9), 6);
  EXPECT_EQ(node_count(6, 4, 6), 0);
}

TEST(CuspCount, Examples) {
  EXPECT_EQ(cusp_count_general(259200, 1410049, 11904), 3585792);
  const BigInt n{1000}, g{77};
  EXPECT_EQ(cusp_count_general(n, g, 3 * n + 2 * g - 2), 0);
  EXPECT_THROW(cusp_count_general(2, 0, 0), Error);
}

TEST(NodeCount, Examples) {
  EXPECT_EQ(node_count(6, 10, 0), 0);
  // (829439 * 829438) / 2 - 1410049 - 3585792, evaluated independently.
  EXPECT_EQ(node_count(829440, 1410049, 3585792), big("343979116800"));
  try {
    node_count(6, 11, 0);
    FAIL() << "expected NegativeNodes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeNodes);
  }
  EXPECT_THROW(node_count(2, 0, 0), Error);
}

TEST(DiscriminantProfile, PublishedPairAtMultFive) {
  const auto p = discriminant_profile(surface_invariants(kFirst), 5);
  EXPECT_EQ(p.mult, 5);
  EXPECT_EQ(p.deg_f, 259200);
  EXPECT_EQ(p.deg_b, 829440);
  EXPECT_EQ(p.half_deg, 414720);
  EXPECT_EQ(p.genus, 1410049);
  EXPECT_EQ(p.cusps, 3585792);
  EXPECT_EQ(p.nodes, big("343979116800"));
  EXPECT_EQ(p.ram_mult, 16);
  EXPECT_EQ(p, discriminant_profile(surface_invariants(kSecond), 5));
}

TEST(DiscriminantProfile, MultTooSmall) {
  try {
    discriminant_profile(surface_invariants(kFirst), 4);
    FAIL() << "expected MultTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultTooSmall);
  }
}

TEST(DiscriminantProfile, Identities) {
  const auto inv = surface_invariants(kFirst);
  for (std::int64_t m = 5; m <= 50; ++m) {
    const auto p = discriminant_profile(inv, m);
    EXPECT_EQ(p.deg_b * m, (3 * m + 1) * p.deg_f);
    EXPECT_EQ(2 * p.genus - 2, BigInt{p.ram_mult} * (p.ram_mult + 1) * inv.kk);
    EXPECT_EQ(p.genus, BigInt{5184} * (3 * m + 2) * (3 * m + 1) + 1);
    EXPECT_GE(p.nodes, 0);
    EXPECT_EQ(p.genus, (p.deg_b - 1) * (p.deg_b - 2) / 2 - p.nodes - p.cusps);
    // Constant offset against (12 m^2 + 9 m) K^2.
    EXPECT_EQ(p.cusps - BigInt{12 * m * m + 9 * m} * 10368, 8832);
  }
}

TEST(DiscriminantProfile, DoublePrecisionAgrees) {
  using Wide = boost::multiprecision::checked_int1024_t;
  for (const CoverType t : {kFirst, CoverType{7, 3, 7, 3}, CoverType{9'999, 3, 9'999, 3}}) {
    const auto inv = surface_invariants(t);
    for (std::int64_t m : {5, 17, 1000, 1'000'000}) {
      const auto p = discriminant_profile(inv, m);
      const auto w = detail::profile_fields<Wide>(inv.kk, inv.euler, m);
      EXPECT_EQ(p.deg_f.str(), w.deg_f.str());
      EXPECT_EQ(p.deg_b.str(), w.deg_b.str());
      EXPECT_EQ(p.genus.str(), w.genus.str());
      EXPECT_EQ(p.cusps.str(), w.cusps.str());
      EXPECT_EQ(p.nodes.str(), w.nodes.str());
    }
  }
}

TEST(DiscriminantProfile, ExceedsOneHundredTwentyEightBits) {
  const auto inv = surface_invariants({9'999, 3, 9'999, 3});
  const auto p = discriminant_profile(inv, 100'000'000);
  EXPECT_GT(boost::multiprecision::msb(p.nodes), 128u);
}

TEST(ZariskiCertificate, PublishedPair) {
  const std::vector<CoverType> pair{kFirst, kSecond};
  const std::vector<std::int64_t> mults{5};
  const auto c = zariski_certificate(pair, mults);
  EXPECT_EQ(c.members, pair);
  EXPECT_EQ(c.shared, (HomeoClassKey{10368, 1856}));
  EXPECT_EQ(c.indices, (std::vector<std::int64_t>{18, 36}));
  ASSERT_EQ(c.profiles.size(), 1u);
  EXPECT_EQ(c.profiles[0].deg_b, 829440);
  ASSERT_EQ(c.argument.size(), 6u);
  EXPECT_EQ(c.argument.front().id, "homeomorphic-surfaces");
  EXPECT_EQ(c.argument.back().id, "contradiction");
  EXPECT_NE(c.argument[2].statement.find("degree 829440"), std::string::npos);
}

TEST(ZariskiCertificate, CanonicalizesMembers) {
  const std::vector<CoverType> pair{{52, 4, 16, 22}, kSecond};
  const auto c = zariski_certificate(pair, std::vector<std::int64_t>{});
  EXPECT_EQ(c.members.front(), kFirst);
}

TEST(ZariskiCertificate, EmptyMults) {
  const std::vector<CoverType> pair{kFirst, kSecond};
  const auto c = zariski_certificate(pair, std::vector<std::int64_t>{});
  EXPECT_TRUE(c.profiles.empty());
  EXPECT_EQ(c.indices, (std::vector<std::int64_t>{18, 36}));
}

TEST(ZariskiCertificate, Errors) {
  const std::vector<CoverType> not_catanese{{7, 3, 7, 3}, {9, 3, 9, 3}};
  try {
    zariski_certificate(not_catanese, std::vector<std::int64_t>{5});
    FAIL() << "expected NotCatanese";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCatanese);
  }
  const std::vector<CoverType> pair{kFirst, kSecond};
  try {
    zariski_certificate(pair, std::vector<std::int64_t>{5, 3});
    FAIL() << "expected MultTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultTooSmall);
  }
}
