#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bidouble/cover_type.hpp"
#include "bidouble/topology.hpp"

namespace bidouble {

/// Four 16-bit fields, a in the high word, so numeric order on packed
/// values equals lexicographic order on (a, b, m2, n2).
using PackedType = std::uint64_t;

PackedType pack(const CoverType& t) noexcept;
CoverType unpack(PackedType p) noexcept;

struct SearchConfig {
  std::int64_t bound = 0;
  std::int64_t k = 2;
  std::optional<std::size_t> max_results;
  std::size_t shard_count = 1;
  std::size_t tuples_per_bucket_cap = 10'000;
  Limits limits;
};

struct BucketMember {
  CoverType type;
  std::int64_t r = 0;
};

struct HomeoClassBucket {
  HomeoClassKey key;
  std::vector<PackedType> members;  // canonical, sorted, deduplicated

  std::vector<BucketMember> expanded() const;
};

using BucketMap = std::unordered_map<HomeoClassKey, HomeoClassBucket, HomeoClassKeyHash>;

struct CataneseTuple {
  HomeoClassKey key;
  std::vector<CoverType> members;
  std::vector<std::int64_t> indices;

  friend bool operator==(const CataneseTuple&, const CataneseTuple&) = default;
};

struct ExtractResult {
  std::vector<CataneseTuple> tuples;
  bool truncated = false;
};

struct BucketSummary {
  HomeoClassKey key;
  std::size_t member_count = 0;
  std::size_t distinct_indices = 0;
  std::size_t tuples_emitted = 0;
  bool truncated = false;
};

struct SearchResult {
  std::vector<CataneseTuple> tuples;
  std::vector<BucketSummary> buckets;  // only buckets that can yield a k-tuple
  std::size_t admissible_count = 0;
  std::size_t class_count = 0;
  bool truncated = false;
};

/// Visits the canonical admissible types of one shard. Shards partition the
/// canonical set; the visiting order is fixed for a given shard count.
template <class Visitor>
void for_each_admissible(std::int64_t bound, std::size_t shard, std::size_t shard_count,
                         Visitor&& visit);

/// Canonical admissible types with every field <= bound, shards concatenated
/// in shard order.
std::vector<CoverType> enumerate_admissible(std::int64_t bound, std::size_t shard_count = 1);

BucketMap group_by_homeo_class(std::span<const CoverType> types);

/// All k-subsets of the bucket with pairwise distinct r, in lexicographic
/// order of member positions, stopping after `cap` tuples.
ExtractResult extract_k_tuples(const HomeoClassBucket& bucket, std::int64_t k,
                               std::size_t cap = 10'000);

/// Throws BoundTooLarge above the field cap, InvalidArgument for bound < 3,
/// k < 2 or shard_count == 0.
SearchResult search(const SearchConfig& cfg);

// ---------------------------------------------------------------------------

namespace detail {

/// (large, small) with small >= 3, large > 2*small and equal parity: the
/// shape shared by (a, n2) and (m2, b).
struct BranchPair {
  std::int64_t large = 0;
  std::int64_t small = 0;
};

std::vector<BranchPair> admissible_branch_pairs(std::int64_t bound);

constexpr CoverType combine(const BranchPair& first, const BranchPair& second) noexcept {
  return {first.large, second.small, second.large, first.small};
}

}  // namespace detail

template <class Visitor>
void for_each_admissible(std::int64_t bound, std::size_t shard, std::size_t shard_count,
                         Visitor&& visit) {
  const auto pairs = detail::admissible_branch_pairs(bound);
  // The swap involution exchanges the two branch pairs, so each unordered
  // {i, j} is one orbit.
  for (std::size_t i = shard; i < pairs.size(); i += shard_count) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const CoverType t = detail::combine(pairs[i], pairs[j]);
      const CoverType s = detail::combine(pairs[j], pairs[i]);
      visit(t < s ? t : s);
    }
  }
}

}  // namespace bidouble
