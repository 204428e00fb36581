#include "bidouble/topology.hpp"

#include <functional>
#include <string>

#include "bidouble/errors.hpp"

namespace bidouble {

std::size_t HomeoClassKeyHash::operator()(const HomeoClassKey& key) const noexcept {
  const auto h1 = std::hash<std::int64_t>{}(key.kk);
  const auto h2 = std::hash<std::int64_t>{}(key.chi);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::string_view to_string(DiffeoVerdict v) noexcept {
  return v == DiffeoVerdict::NotDiffeomorphic ? "NOT_DIFFEOMORPHIC" : "INCONCLUSIVE";
}

HomeoClassKey homeo_class_key(const SurfaceInvariants& inv) noexcept { return {inv.kk, inv.chi}; }

bool are_homeomorphic(const SurfaceInvariants& lhs, const SurfaceInvariants& rhs) noexcept {
  return homeo_class_key(lhs) == homeo_class_key(rhs);
}

namespace {

std::string key_text(const HomeoClassKey& key) {
  return "(" + std::to_string(key.kk) + "," + std::to_string(key.chi) + ")";
}

}  // namespace

DiffeoVerdict diffeo_obstruction(const SurfaceInvariants& lhs, const SurfaceInvariants& rhs) {
  if (!are_homeomorphic(lhs, rhs)) {
    throw Error(ErrorCode::NotComparable, "homeomorphism classes differ: " +
                                              key_text(homeo_class_key(lhs)) + " vs " +
                                              key_text(homeo_class_key(rhs)));
  }
  return lhs.r != rhs.r ? DiffeoVerdict::NotDiffeomorphic : DiffeoVerdict::Inconclusive;
}

TupleVerdict is_catanese_tuple(std::span<const CoverType> types, const Limits& limits) {
  if (types.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "a tuple needs at least 2 members, got " + std::to_string(types.size()));
  }

  std::vector<SurfaceInvariants> invariants;
  invariants.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    try {
      validate_type(types[i], limits);
    } catch (const Error& e) {
      std::vector<std::string> details{"member " + std::to_string(i) + " " +
                                       to_string(types[i]) + " is not admissible"};
      details.insert(details.end(), e.details().begin(), e.details().end());
      throw Error(ErrorCode::InvalidMember, std::move(details));
    }
    invariants.push_back(surface_invariants(types[i]));
  }

  TupleVerdict verdict;
  verdict.shared_key = homeo_class_key(invariants.front());
  for (const auto& inv : invariants) verdict.indices.push_back(inv.r);

  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      const std::string pair = "members " + std::to_string(i) + " and " + std::to_string(j);
      const auto ki = homeo_class_key(invariants[i]);
      const auto kj = homeo_class_key(invariants[j]);
      if (ki != kj) {
        verdict.failures.push_back(pair + ": homeomorphism keys differ " + key_text(ki) +
                                   " vs " + key_text(kj));
      }
      if (invariants[i].r == invariants[j].r) {
        verdict.failures.push_back(pair + ": equal divisibility index r=" +
                                   std::to_string(invariants[i].r));
      }
    }
  }
  verdict.is_catanese = verdict.failures.empty();
  return verdict;
}

}  // namespace bidouble
