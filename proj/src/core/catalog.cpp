#include "bidouble/catalog.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <utility>

#include "bidouble/errors.hpp"

namespace bidouble {

using nlohmann::json;

std::string_view to_string(RecordKind kind) noexcept {
  switch (kind) {
    case RecordKind::Invariants: return "invariants";
    case RecordKind::Tuple: return "tuple";
    case RecordKind::Certificate: return "certificate";
  }
  return "invariants";
}

RecordKind parse_record_kind(std::string_view name) {
  if (name == "invariants") return RecordKind::Invariants;
  if (name == "tuple") return RecordKind::Tuple;
  if (name == "certificate") return RecordKind::Certificate;
  throw Error(ErrorCode::SchemaMismatch, "unknown record kind '" + std::string(name) + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CatalogRecord make_record(RecordKind kind, json payload, bool with_timestamp) {
  CatalogRecord record;
  record.kind = kind;
  record.payload = std::move(payload);
  if (with_timestamp) record.created_at = utc_timestamp();
  return record;
}

std::string encode_record(const CatalogRecord& record) {
  json j;
  j["schema_version"] = record.schema_version;
  j["kind"] = to_string(record.kind);
  j["payload"] = record.payload;
  if (!record.created_at.empty()) j["created_at"] = record.created_at;
  return j.dump();
}

CatalogRecord decode_record(std::string_view line, std::size_t line_number) {
  const std::string where = "line " + std::to_string(line_number) + ": ";
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::SchemaMismatch, where + "not a JSON object");
  }
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
    throw Error(ErrorCode::SchemaMismatch, where + "missing schema_version");
  }
  CatalogRecord record;
  record.schema_version = j["schema_version"].get<int>();
  if (record.schema_version != kSchemaVersion) {
    throw Error(ErrorCode::SchemaMismatch, where + "schema_version " +
                                               std::to_string(record.schema_version) +
                                               ", expected " + std::to_string(kSchemaVersion));
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::SchemaMismatch, where + "missing kind");
  }
  try {
    record.kind = parse_record_kind(j["kind"].get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaMismatch, where + e.details().front());
  }
  if (!j.contains("payload") || !j["payload"].is_object()) {
    throw Error(ErrorCode::SchemaMismatch, where + "missing payload");
  }
  record.payload = std::move(j["payload"]);
  if (j.contains("created_at")) {
    if (!j["created_at"].is_string()) {
      throw Error(ErrorCode::SchemaMismatch, where + "created_at is not a string");
    }
    record.created_at = j["created_at"].get<std::string>();
  }
  return record;
}

CatalogWriter::CatalogWriter(const std::filesystem::path& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string() + ": " + std::strerror(errno));
  }
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    const int err = errno;
    close();
    throw Error(ErrorCode::IoError, "catalog " + path.string() + " is held by another writer (" +
                                        std::strerror(err) + ")");
  }
}

CatalogWriter::~CatalogWriter() { close(); }

CatalogWriter::CatalogWriter(CatalogWriter&& other) noexcept
    : path_(std::move(other.path_)), fd_(std::exchange(other.fd_, -1)) {}

CatalogWriter& CatalogWriter::operator=(CatalogWriter&& other) noexcept {
  if (this != &other) {
    close();
    path_ = std::move(other.path_);
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

void CatalogWriter::close() noexcept {
  if (fd_ >= 0) {
    ::close(fd_);  // releases the lock
    fd_ = -1;
  }
}

void CatalogWriter::append(const CatalogRecord& record) {
  if (fd_ < 0) throw Error(ErrorCode::IoError, "catalog writer is closed");
  const std::string line = encode_record(record) + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::IoError,
                  "write to " + path_.string() + " failed: " + std::strerror(errno));
    }
    written += static_cast<std::size_t>(n);
  }
}

void write_catalog(const std::filesystem::path& path, std::span<const CatalogRecord> records) {
  CatalogWriter writer(path);
  for (const auto& r : records) writer.append(r);
}

std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    out.push_back(decode_record(line, line_number));
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read error on " + path.string());
  return out;
}

// --- JSON mappings -----------------------------------------------------------

namespace {

BigInt big_from(const json& j, const char* field) {
  return parse_decimal(j.at(field).get<std::string>());
}

}  // namespace

void to_json(json& j, const CoverType& t) {
  j = json{{"a", t.a}, {"b", t.b}, {"m2", t.m2}, {"n2", t.n2}};
}

void from_json(const json& j, CoverType& t) {
  j.at("a").get_to(t.a);
  j.at("b").get_to(t.b);
  j.at("m2").get_to(t.m2);
  j.at("n2").get_to(t.n2);
}

void to_json(json& j, const DerivedParams& p) {
  j = json{{"u", p.u}, {"v", p.v}, {"w", p.w}, {"z", p.z}};
}

void from_json(const json& j, DerivedParams& p) {
  j.at("u").get_to(p.u);
  j.at("v").get_to(p.v);
  j.at("w").get_to(p.w);
  j.at("z").get_to(p.z);
}

void to_json(json& j, const SurfaceInvariants& inv) {
  j = json{{"kk", inv.kk},         {"chi", inv.chi},         {"euler", inv.euler},
           {"sigma", inv.sigma},   {"b2", inv.b2},           {"b_plus", inv.b_plus},
           {"b_minus", inv.b_minus}, {"p_g", inv.p_g},       {"r", inv.r}};
}

void from_json(const json& j, SurfaceInvariants& inv) {
  j.at("kk").get_to(inv.kk);
  j.at("chi").get_to(inv.chi);
  j.at("euler").get_to(inv.euler);
  j.at("sigma").get_to(inv.sigma);
  j.at("b2").get_to(inv.b2);
  j.at("b_plus").get_to(inv.b_plus);
  j.at("b_minus").get_to(inv.b_minus);
  j.at("p_g").get_to(inv.p_g);
  j.at("r").get_to(inv.r);
}

void to_json(json& j, const HomeoClassKey& key) { j = json{{"kk", key.kk}, {"chi", key.chi}}; }

void from_json(const json& j, HomeoClassKey& key) {
  j.at("kk").get_to(key.kk);
  j.at("chi").get_to(key.chi);
}

void to_json(json& j, const TupleVerdict& v) {
  j = json{{"is_catanese", v.is_catanese},
           {"shared_key", v.shared_key},
           {"indices", v.indices},
           {"failures", v.failures}};
}

void to_json(json& j, const DiscriminantProfile& p) {
  j = json{{"mult", p.mult},
           {"deg_f", to_decimal(p.deg_f)},
           {"deg_b", to_decimal(p.deg_b)},
           {"half_deg", to_decimal(p.half_deg)},
           {"genus", to_decimal(p.genus)},
           {"cusps", to_decimal(p.cusps)},
           {"nodes", to_decimal(p.nodes)},
           {"ram_mult", p.ram_mult}};
}

void from_json(const json& j, DiscriminantProfile& p) {
  j.at("mult").get_to(p.mult);
  p.deg_f = big_from(j, "deg_f");
  p.deg_b = big_from(j, "deg_b");
  p.half_deg = big_from(j, "half_deg");
  p.genus = big_from(j, "genus");
  p.cusps = big_from(j, "cusps");
  p.nodes = big_from(j, "nodes");
  j.at("ram_mult").get_to(p.ram_mult);
}

void to_json(json& j, const ArgumentStep& s) {
  j = json{{"id", s.id}, {"statement", s.statement}};
}

void from_json(const json& j, ArgumentStep& s) {
  j.at("id").get_to(s.id);
  j.at("statement").get_to(s.statement);
}

void to_json(json& j, const ZariskiCertificate& c) {
  j = json{{"members", c.members},   {"shared", c.shared},     {"indices", c.indices},
           {"profiles", c.profiles}, {"argument", c.argument}};
}

void from_json(const json& j, ZariskiCertificate& c) {
  j.at("members").get_to(c.members);
  j.at("shared").get_to(c.shared);
  j.at("indices").get_to(c.indices);
  j.at("profiles").get_to(c.profiles);
  j.at("argument").get_to(c.argument);
}

void to_json(json& j, const CataneseTuple& t) {
  j = json{{"key", t.key}, {"members", t.members}, {"indices", t.indices}};
}

void from_json(const json& j, CataneseTuple& t) {
  j.at("key").get_to(t.key);
  j.at("members").get_to(t.members);
  j.at("indices").get_to(t.indices);
}

json invariants_payload(const CoverType& t) {
  return json{{"type", t},
              {"canonical", canonicalize(t)},
              {"params", derive_params(t)},
              {"invariants", surface_invariants(t)}};
}

}  // namespace bidouble
