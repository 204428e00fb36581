#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bidouble/cover_type.hpp"

namespace bidouble {

/// (K^2, chi). For this family the intersection form is even and the
/// surfaces are simply connected, so equal keys mean homeomorphic surfaces.
struct HomeoClassKey {
  std::int64_t kk = 0;
  std::int64_t chi = 0;

  friend auto operator<=>(const HomeoClassKey&, const HomeoClassKey&) = default;
};

struct HomeoClassKeyHash {
  std::size_t operator()(const HomeoClassKey& key) const noexcept;
};

enum class DiffeoVerdict { NotDiffeomorphic, Inconclusive };

std::string_view to_string(DiffeoVerdict v) noexcept;

struct TupleVerdict {
  bool is_catanese = false;
  HomeoClassKey shared_key;
  std::vector<std::int64_t> indices;
  std::vector<std::string> failures;
};

HomeoClassKey homeo_class_key(const SurfaceInvariants& inv) noexcept;
bool are_homeomorphic(const SurfaceInvariants& lhs, const SurfaceInvariants& rhs) noexcept;

/// Distinct divisibility indices rule out a diffeomorphism; equal ones
/// decide nothing. Throws NotComparable when the surfaces are not
/// homeomorphic in the first place.
DiffeoVerdict diffeo_obstruction(const SurfaceInvariants& lhs, const SurfaceInvariants& rhs);

/// Checks that all members share one homeomorphism class and have pairwise
/// distinct divisibility indices. `failures` names every offending pair.
/// Throws InvalidMember for an inadmissible member and InvalidArgument for
/// fewer than two members.
TupleVerdict is_catanese_tuple(std::span<const CoverType> types, const Limits& limits = {});

}  // namespace bidouble
