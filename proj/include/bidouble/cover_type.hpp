#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bidouble {

/// Type (a,b),(m2,n2) of a simple bidouble cover of P1 x P1. The second
/// branch pair is named m2/n2 so it never collides with the canonical
/// multiple m or a node count n.
struct CoverType {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m2 = 0;
  std::int64_t n2 = 0;

  friend auto operator<=>(const CoverType&, const CoverType&) = default;
};

std::string to_string(const CoverType& t);

struct Limits {
  std::int64_t field_cap = 10'000;
};

struct DerivedParams {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;
  std::int64_t z = 0;

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

struct SurfaceInvariants {
  std::int64_t kk = 0;     // K_S^2
  std::int64_t chi = 0;    // chi(O_S)
  std::int64_t euler = 0;  // topological Euler number
  std::int64_t sigma = 0;  // signature
  std::int64_t b2 = 0;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
  std::int64_t p_g = 0;
  std::int64_t r = 0;      // divisibility index of K_S

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Lists every violated admissibility constraint; empty means admissible.
/// Does not look at the field cap.
std::vector<std::string> constraint_violations(const CoverType& t);

/// Returns the type if admissible. Throws OutOfRange when a field exceeds
/// `limits.field_cap`, otherwise ConstraintViolation listing every failure.
CoverType validate_type(std::int64_t a, std::int64_t b, std::int64_t m2,
                        std::int64_t n2, const Limits& limits = {});
CoverType validate_type(const CoverType& t, const Limits& limits = {});

bool is_admissible(const CoverType& t) noexcept;

// The functions below assume an admissible type.
DerivedParams derive_params(const CoverType& t);
SurfaceInvariants surface_invariants(const CoverType& t);
std::int64_t divisibility_index(const DerivedParams& p);

/// The branch-data swap (a,b,m2,n2) -> (m2,n2,a,b).
constexpr CoverType swap_branch_data(const CoverType& t) noexcept {
  return {t.m2, t.n2, t.a, t.b};
}

/// Lexicographic minimum of t and its swap image.
CoverType canonicalize(const CoverType& t) noexcept;

}  // namespace bidouble
