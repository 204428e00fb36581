#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bidouble/cover_type.hpp"
#include "bidouble/discriminant.hpp"
#include "bidouble/search.hpp"
#include "bidouble/topology.hpp"

namespace bidouble {

inline constexpr int kSchemaVersion = 1;

enum class RecordKind { Invariants, Tuple, Certificate };

std::string_view to_string(RecordKind kind) noexcept;
/// Throws SchemaMismatch for an unknown name.
RecordKind parse_record_kind(std::string_view name);

struct CatalogRecord {
  int schema_version = kSchemaVersion;
  RecordKind kind = RecordKind::Invariants;
  nlohmann::json payload;
  std::string created_at;  // empty when written without a timestamp

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

CatalogRecord make_record(RecordKind kind, nlohmann::json payload, bool with_timestamp);

/// One line of JSONL, without the trailing newline.
std::string encode_record(const CatalogRecord& record);
/// Throws SchemaMismatch on a bad line; `line_number` goes into the message.
CatalogRecord decode_record(std::string_view line, std::size_t line_number = 0);

/// Append-only JSONL writer. Holds an exclusive advisory lock on the file
/// for its lifetime, so a second writer on the same path fails with IoError.
class CatalogWriter {
 public:
  explicit CatalogWriter(const std::filesystem::path& path);
  ~CatalogWriter();
  CatalogWriter(const CatalogWriter&) = delete;
  CatalogWriter& operator=(const CatalogWriter&) = delete;
  CatalogWriter(CatalogWriter&& other) noexcept;
  CatalogWriter& operator=(CatalogWriter&& other) noexcept;

  void append(const CatalogRecord& record);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  void close() noexcept;

  std::filesystem::path path_;
  int fd_ = -1;
};

void write_catalog(const std::filesystem::path& path, std::span<const CatalogRecord> records);
std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path);

// JSON mappings. Big integers travel as decimal strings.
void to_json(nlohmann::json& j, const CoverType& t);
void from_json(const nlohmann::json& j, CoverType& t);
void to_json(nlohmann::json& j, const DerivedParams& p);
void from_json(const nlohmann::json& j, DerivedParams& p);
void to_json(nlohmann::json& j, const SurfaceInvariants& inv);
void from_json(const nlohmann::json& j, SurfaceInvariants& inv);
void to_json(nlohmann::json& j, const HomeoClassKey& key);
void from_json(const nlohmann::json& j, HomeoClassKey& key);
void to_json(nlohmann::json& j, const TupleVerdict& v);
void to_json(nlohmann::json& j, const DiscriminantProfile& p);
void from_json(const nlohmann::json& j, DiscriminantProfile& p);
void to_json(nlohmann::json& j, const ArgumentStep& s);
void from_json(const nlohmann::json& j, ArgumentStep& s);
void to_json(nlohmann::json& j, const ZariskiCertificate& c);
void from_json(const nlohmann::json& j, ZariskiCertificate& c);
void to_json(nlohmann::json& j, const CataneseTuple& t);
void from_json(const nlohmann::json& j, CataneseTuple& t);

/// Payload of an `invariants` record.
nlohmann::json invariants_payload(const CoverType& t);

}  // namespace bidouble
