#include "bidouble/report.hpp"

#include <string>

#include "bidouble/discriminant.hpp"

namespace bidouble {

namespace {

// Values exactly as published alongside the example pair.
constexpr std::int64_t kPrintedKK = 10368;
constexpr std::int64_t kPrintedChi = 1456;
constexpr std::int64_t kPrintedFirstIndex = 18;
constexpr std::int64_t kPrintedSecondIndex = 36;

// Published closed forms for the m-canonical branch curves.
BigInt printed_degree(std::int64_t m) { return BigInt{10368} * m * (3 * m + 1); }
BigInt printed_genus(std::int64_t m) { return BigInt{5184} * (3 * m + 2) * (3 * m + 1) + 1; }
BigInt printed_cusps(std::int64_t m) { return BigInt{10368} * (12 * m * m + 9 * m) - 13632; }

ReportEntry entry(std::string field, const BigInt& printed, const BigInt& computed,
                  bool expected_match) {
  ReportEntry e;
  e.field = std::move(field);
  e.printed = to_decimal(printed);
  e.computed = to_decimal(computed);
  e.match = printed == computed;
  e.expected_match = expected_match;
  if (!e.match) e.note = "computed - printed = " + to_decimal(computed - printed);
  return e;
}

}  // namespace

bool ReferenceExampleReport::conforms() const noexcept {
  for (const auto& e : entries) {
    if (e.match != e.expected_match) return false;
  }
  return true;
}

ReferenceExampleReport verify_reference_example(std::span<const std::int64_t> mults) {
  const auto first = surface_invariants(kReferenceFirst);
  const auto second = surface_invariants(kReferenceSecond);

  ReferenceExampleReport report;
  report.mults.assign(mults.begin(), mults.end());

  {
    auto e = entry("kk", kPrintedKK, first.kk, true);
    if (first.kk != second.kk) {
      e.match = false;
      e.note = "members disagree: " + std::to_string(first.kk) + " vs " +
               std::to_string(second.kk);
    }
    report.entries.push_back(std::move(e));
  }
  {
    auto e = entry("chi", kPrintedChi, first.chi, false);
    if (first.chi != second.chi) {
      e.note = "members disagree: " + std::to_string(first.chi) + " vs " +
               std::to_string(second.chi);
    } else {
      e.note += "; both members give " + std::to_string(first.chi);
    }
    report.entries.push_back(std::move(e));
  }
  report.entries.push_back(entry("r_first", kPrintedFirstIndex, first.r, true));
  report.entries.push_back(entry("r_second", kPrintedSecondIndex, second.r, true));

  for (const auto m : mults) {
    const auto profile = discriminant_profile(first, m);
    const std::string suffix = "_m" + std::to_string(m);
    report.entries.push_back(entry("deg_b" + suffix, printed_degree(m), profile.deg_b, true));
    report.entries.push_back(entry("genus" + suffix, printed_genus(m), profile.genus, true));
    report.entries.push_back(entry("cusps" + suffix, printed_cusps(m), profile.cusps, false));
  }
  return report;
}

}  // namespace bidouble
