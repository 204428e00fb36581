#pragma once

// Test-only reference computations, written without touching the library's
// enumeration or arithmetic paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Quad = std::array<std::int64_t, 4>;  // a, b, m2, n2

inline bool admissible(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n) {
  return a > 2 * n && n >= 3 && m > 2 * b && b >= 3 && (a - n) % 2 == 0 && (b - m) % 2 == 0;
}

/// Every admissible 4-tuple in [1, bound]^4, reduced to min(t, swap(t)).
inline std::set<Quad> admissible_modulo_swap(std::int64_t bound) {
  std::set<Quad> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 1; b <= bound; ++b)
      for (std::int64_t m = 1; m <= bound; ++m)
        for (std::int64_t n = 1; n <= bound; ++n)
          if (admissible(a, b, m, n)) {
            const Quad t{a, b, m, n};
            const Quad s{m, n, a, b};
            out.insert(std::min(t, s));
          }
  return out;
}

/// chi expanded as a polynomial in the cover parameters.
inline std::int64_t chi_polynomial(std::int64_t a, std::int64_t b, std::int64_t m,
                                   std::int64_t n) {
  return 4 + a * b + n * m + (a + n) * (b + m) - 2 * (a + b + m + n);
}

/// Number of k-subsets of `rs` with pairwise distinct entries, by bitmask.
inline std::vector<std::vector<std::size_t>> distinct_subsets(const std::vector<std::int64_t>& rs,
                                                              std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = rs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::vector<std::size_t> picked;
    std::set<std::int64_t> seen;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        picked.push_back(i);
        ok = ok && seen.insert(rs[i]).second;
      }
    }
    if (ok) out.push_back(picked);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
