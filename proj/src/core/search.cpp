#include "bidouble/search.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "bidouble/errors.hpp"

namespace bidouble {

PackedType pack(const CoverType& t) noexcept {
  const auto field = [](std::int64_t x) { return static_cast<PackedType>(x) & 0xFFFFu; };
  return field(t.a) << 48 | field(t.b) << 32 | field(t.m2) << 16 | field(t.n2);
}

CoverType unpack(PackedType p) noexcept {
  const auto field = [p](int shift) { return static_cast<std::int64_t>((p >> shift) & 0xFFFFu); };
  return {field(48), field(32), field(16), field(0)};
}

std::vector<BucketMember> HomeoClassBucket::expanded() const {
  std::vector<BucketMember> out;
  out.reserve(members.size());
  for (const auto packed : members) {
    const CoverType t = unpack(packed);
    out.push_back({t, divisibility_index(derive_params(t))});
  }
  return out;
}

namespace detail {

std::vector<BranchPair> admissible_branch_pairs(std::int64_t bound) {
  std::vector<BranchPair> out;
  for (std::int64_t small = 3; 2 * small + 1 <= bound; ++small) {
    // smallest value above 2*small with the parity of small
    for (std::int64_t large = 2 * small + (small % 2 == 0 ? 2 : 1); large <= bound; large += 2) {
      out.push_back({large, small});
    }
  }
  return out;
}

}  // namespace detail

std::vector<CoverType> enumerate_admissible(std::int64_t bound, std::size_t shard_count) {
  if (shard_count == 0) shard_count = 1;
  std::vector<CoverType> out;
  for (std::size_t shard = 0; shard < shard_count; ++shard) {
    for_each_admissible(bound, shard, shard_count, [&](const CoverType& t) { out.push_back(t); });
  }
  return out;
}

namespace {

void add_member(BucketMap& map, const CoverType& t) {
  const HomeoClassKey key = homeo_class_key(surface_invariants(t));
  auto& bucket = map[key];
  bucket.key = key;
  bucket.members.push_back(pack(t));
}

void finalize(BucketMap& map) {
  for (auto& [key, bucket] : map) {
    std::sort(bucket.members.begin(), bucket.members.end());
    bucket.members.erase(std::unique(bucket.members.begin(), bucket.members.end()),
                         bucket.members.end());
  }
}

}  // namespace

BucketMap group_by_homeo_class(std::span<const CoverType> types) {
  BucketMap map;
  for (const auto& t : types) add_member(map, t);
  finalize(map);
  return map;
}

ExtractResult extract_k_tuples(const HomeoClassBucket& bucket, std::int64_t k, std::size_t cap) {
  ExtractResult result;
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  const auto members = bucket.expanded();
  const auto size = static_cast<std::size_t>(k);

  std::vector<std::int64_t> distinct;
  for (const auto& m : members) distinct.push_back(m.r);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < size) return result;

  // Depth-first over increasing member positions, pruning on repeated r.
  std::vector<std::size_t> chosen;
  chosen.reserve(size);
  const auto recurse = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == size) {
      if (result.tuples.size() == cap) {
        result.truncated = true;
        return false;
      }
      CataneseTuple tuple;
      tuple.key = bucket.key;
      for (const auto idx : chosen) {
        tuple.members.push_back(members[idx].type);
        tuple.indices.push_back(members[idx].r);
      }
      result.tuples.push_back(std::move(tuple));
      return true;
    }
    const std::size_t remaining = size - chosen.size();
    for (std::size_t i = start; i + remaining <= members.size(); ++i) {
      const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return members[c].r == members[i].r;
      });
      if (clash) continue;
      chosen.push_back(i);
      const bool keep_going = self(self, i + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  recurse(recurse, 0);
  return result;
}

SearchResult search(const SearchConfig& cfg) {
  if (cfg.bound > cfg.limits.field_cap) {
    throw Error(ErrorCode::BoundTooLarge, "bound " + std::to_string(cfg.bound) +
                                              " exceeds cap " +
                                              std::to_string(cfg.limits.field_cap));
  }
  if (cfg.bound < 3) throw Error(ErrorCode::InvalidArgument, "bound must be at least 3");
  if (cfg.k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (cfg.shard_count == 0) throw Error(ErrorCode::InvalidArgument, "shard count must be >= 1");

  // Each shard fills its own map; the maps are merged afterwards by this
  // thread alone.
  std::vector<BucketMap> partial(cfg.shard_count);
  std::vector<std::size_t> counts(cfg.shard_count, 0);
  const auto run_shard = [&](std::size_t shard) {
    for_each_admissible(cfg.bound, shard, cfg.shard_count, [&](const CoverType& t) {
      add_member(partial[shard], t);
      ++counts[shard];
    });
  };
  if (cfg.shard_count == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(cfg.shard_count);
    for (std::size_t s = 0; s < cfg.shard_count; ++s) workers.emplace_back(run_shard, s);
  }

  BucketMap merged = std::move(partial.front());
  for (std::size_t s = 1; s < partial.size(); ++s) {
    for (auto& [key, bucket] : partial[s]) {
      auto& target = merged[key];
      target.key = key;
      target.members.insert(target.members.end(), bucket.members.begin(), bucket.members.end());
    }
  }
  finalize(merged);

  SearchResult result;
  for (const auto c : counts) result.admissible_count += c;
  result.class_count = merged.size();

  std::vector<const HomeoClassBucket*> ordered;
  for (const auto& [key, bucket] : merged) {
    if (bucket.members.size() >= static_cast<std::size_t>(cfg.k)) ordered.push_back(&bucket);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* l, const auto* r) { return l->key < r->key; });

  for (const auto* bucket : ordered) {
    auto extracted = extract_k_tuples(*bucket, cfg.k, cfg.tuples_per_bucket_cap);
    if (extracted.tuples.empty()) continue;

    BucketSummary summary;
    summary.key = bucket->key;
    summary.member_count = bucket->members.size();
    std::vector<std::int64_t> rs;
    for (const auto& m : bucket->expanded()) rs.push_back(m.r);
    std::sort(rs.begin(), rs.end());
    summary.distinct_indices =
        static_cast<std::size_t>(std::unique(rs.begin(), rs.end()) - rs.begin());
    summary.tuples_emitted = extracted.tuples.size();
    summary.truncated = extracted.truncated;
    result.truncated = result.truncated || extracted.truncated;
    result.buckets.push_back(summary);

    for (auto& t : extracted.tuples) result.tuples.push_back(std::move(t));
  }

  if (cfg.max_results && result.tuples.size() > *cfg.max_results) {
    result.tuples.resize(*cfg.max_results);
    result.truncated = true;
  }
  return result;
}

}  // namespace bidouble
