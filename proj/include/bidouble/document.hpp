#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bidouble/catalog.hpp"
#include "bidouble/errors.hpp"
#include "bidouble/search.hpp"

namespace bidouble {

enum class Format { Json, Csv };

/// Output of one CLI verb: a JSON object, the same data flattened to CSV
/// rows, and the catalog records it produces.
struct Document {
  nlohmann::json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::pair<RecordKind, nlohmann::json>> records;

  std::string render(Format format) const;
};

std::string csv_escape(const std::string& field);

Document error_document(const Error& error);

// Builders throw the underlying operation's errors, except the tuple check,
// which always returns the verdict.
Document invariants_document(const CoverType& type);
Document check_pair_document(const CoverType& lhs, const CoverType& rhs);
Document check_tuple_document(std::span<const CoverType> types, TupleVerdict* verdict_out);
Document discriminant_document(const CoverType& type, std::span<const std::int64_t> mults);
Document certificate_document(const ZariskiCertificate& certificate);
Document search_document(const SearchResult& result, const SearchConfig& cfg);
Document reference_report_document(std::span<const std::int64_t> mults, bool* conforms_out);

}  // namespace bidouble
