#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bidouble/cover_type.hpp"

namespace bidouble {

/// The published Catanese pair (16,22),(52,4) and (28,10),(28,10).
inline constexpr CoverType kReferenceFirst{16, 22, 52, 4};
inline constexpr CoverType kReferenceSecond{28, 10, 28, 10};

struct ReportEntry {
  std::string field;
  std::string printed;   // value as published (closed forms evaluated at m)
  std::string computed;
  bool match = false;
  bool expected_match = false;  // documented baseline
  std::string note;
};

struct ReferenceExampleReport {
  std::vector<std::int64_t> mults;
  std::vector<ReportEntry> entries;

  /// True iff every entry's match flag equals its documented baseline.
  bool conforms() const noexcept;
};

/// Recomputes the published example from its two cover types and compares
/// field by field. K^2, both indices, deg B and genus are expected to agree;
/// chi and the cusp count are expected to differ (the printed values do not
/// follow from the printed types). Throws MultTooSmall for any mult < 5.
ReferenceExampleReport verify_reference_example(std::span<const std::int64_t> mults);

}  // namespace bidouble
