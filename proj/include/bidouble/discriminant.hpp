#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bidouble/bigint.hpp"
#include "bidouble/cover_type.hpp"
#include "bidouble/topology.hpp"

namespace bidouble {

inline constexpr std::int64_t kMinCanonicalMultiple = 5;

/// Numerical data of the branch curve B of a generic projection given by a
/// three-dimensional subsystem of |mK_S|. The ramification curve is
/// R ~ (3m+1)K_S and B is its image, with ordinary cusps and nodes only.
struct DiscriminantProfile {
  std::int64_t mult = 0;
  BigInt deg_f;     // degree of the covering, m^2 K^2
  BigInt deg_b;     // degree of B
  BigInt half_deg;  // deg_b / 2
  BigInt genus;     // genus of the normalization of B
  BigInt cusps;
  BigInt nodes;
  std::int64_t ram_mult = 0;  // 3m+1

  friend bool operator==(const DiscriminantProfile&, const DiscriminantProfile&) = default;
};

/// Cusp count of the branch curve of a generic covering of degree `deg_f`
/// from a surface with Euler number `euler`, whose ramification curve has
/// genus `genus`. Comes from additivity of the Euler characteristic over
/// the strata complement / smooth branch points / nodes / cusps, with fibre
/// sizes N, N-1, N-2, N-2. Throws InvalidArgument if deg_f < 3.
BigInt cusp_count_general(const BigInt& deg_f, const BigInt& genus, const BigInt& euler);

/// Plane-curve genus formula solved for the node count. Throws
/// NegativeNodes on a negative result and InvalidArgument if deg_b < 3.
BigInt node_count(const BigInt& deg_b, const BigInt& genus, const BigInt& cusps);

/// Throws MultTooSmall for mult < 5.
DiscriminantProfile discriminant_profile(const SurfaceInvariants& inv, std::int64_t mult);

/// One step of the argument that the branch curves form a Zariski tuple.
struct ArgumentStep {
  std::string id;
  std::string statement;

  friend bool operator==(const ArgumentStep&, const ArgumentStep&) = default;
};

struct ZariskiCertificate {
  std::vector<CoverType> members;  // canonical forms, input order
  HomeoClassKey shared;
  std::vector<std::int64_t> indices;
  std::vector<DiscriminantProfile> profiles;  // one per requested mult
  std::vector<ArgumentStep> argument;

  friend bool operator==(const ZariskiCertificate&, const ZariskiCertificate&) = default;
};

/// Throws NotCatanese (with the verdict's failures) or MultTooSmall.
ZariskiCertificate zariski_certificate(std::span<const CoverType> types,
                                       std::span<const std::int64_t> mults,
                                       const Limits& limits = {});

namespace detail {

// Integer-type generic arithmetic behind the profile, so the same formulas
// can be evaluated at a second precision.
template <class Int>
Int cusp_count(const Int& deg_f, const Int& genus, const Int& euler) {
  return 3 * deg_f + (2 * genus - 2) - euler;
}

template <class Int>
Int node_residual(const Int& deg_b, const Int& genus, const Int& cusps) {
  return (deg_b - 1) * (deg_b - 2) / 2 - genus - cusps;
}

template <class Int>
struct ProfileFields {
  Int deg_f;
  Int deg_b;
  Int genus;
  Int cusps;
  Int nodes;
};

template <class Int>
ProfileFields<Int> profile_fields(std::int64_t kk, std::int64_t euler, std::int64_t mult) {
  const Int k2{kk};
  const Int m{mult};
  const Int ram = 3 * m + 1;
  ProfileFields<Int> f;
  f.deg_f = m * m * k2;
  f.deg_b = m * ram * k2;
  // 2g - 2 = R.(R + K) = (3m+1)(3m+2) K^2, and K^2 is even.
  f.genus = ram * (ram + 1) * k2 / 2 + 1;
  f.cusps = cusp_count(f.deg_f, f.genus, Int{euler});
  f.nodes = node_residual(f.deg_b, f.genus, f.cusps);
  return f;
}

}  // namespace detail

}  // namespace bidouble
