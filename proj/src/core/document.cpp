#include "bidouble/document.hpp"

#include <string>

#include "bidouble/discriminant.hpp"
#include "bidouble/report.hpp"

namespace bidouble {

using nlohmann::json;

namespace {

std::string str(std::int64_t x) { return std::to_string(x); }

std::string joined(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::string> type_cells(const CoverType& t) {
  return {str(t.a), str(t.b), str(t.m2), str(t.n2)};
}

std::vector<std::string> profile_cells(const DiscriminantProfile& p) {
  return {str(p.mult),           to_decimal(p.deg_f), to_decimal(p.deg_b),
          to_decimal(p.half_deg), to_decimal(p.genus), to_decimal(p.cusps),
          to_decimal(p.nodes),   str(p.ram_mult)};
}

const std::vector<std::string> kProfileHeader{"mult",  "deg_f", "deg_b", "half_deg",
                                              "genus", "cusps", "nodes", "ram_mult"};

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Document::render(Format format) const {
  if (format == Format::Json) return json.dump(2) + "\n";
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(csv_header);
  for (const auto& row : csv_rows) line(row);
  return out;
}

Document error_document(const Error& error) {
  Document doc;
  doc.json = json{{"error", error_name(error.code())}, {"details", error.details()}};
  doc.csv_header = {"error", "detail"};
  for (const auto& d : error.details()) doc.csv_rows.push_back({std::string(error_name(error.code())), d});
  return doc;
}

Document invariants_document(const CoverType& type) {
  const CoverType t = validate_type(type);
  const auto p = derive_params(t);
  const auto inv = surface_invariants(t);

  Document doc;
  doc.json = invariants_payload(t);
  doc.csv_header = {"a",  "b",     "m2",    "n2",    "u",  "v",      "w",       "z",   "kk",
                    "chi", "euler", "sigma", "b2", "b_plus", "b_minus", "p_g", "r"};
  auto row = type_cells(t);
  for (const auto x : {p.u, p.v, p.w, p.z, inv.kk, inv.chi, inv.euler, inv.sigma, inv.b2,
                       inv.b_plus, inv.b_minus, inv.p_g, inv.r}) {
    row.push_back(str(x));
  }
  doc.csv_rows.push_back(std::move(row));
  doc.records.emplace_back(RecordKind::Invariants, doc.json);
  return doc;
}

Document check_pair_document(const CoverType& lhs, const CoverType& rhs) {
  const CoverType first = validate_type(lhs);
  const CoverType second = validate_type(rhs);
  const auto i1 = surface_invariants(first);
  const auto i2 = surface_invariants(second);
  const bool homeo = are_homeomorphic(i1, i2);

  Document doc;
  doc.json = json{{"first", {{"type", first}, {"invariants", i1}}},
                  {"second", {{"type", second}, {"invariants", i2}}},
                  {"homeomorphic", homeo},
                  {"diffeo_verdict", nullptr}};
  std::string verdict = "NOT_COMPARABLE";
  if (homeo) {
    verdict = std::string(to_string(diffeo_obstruction(i1, i2)));
    doc.json["diffeo_verdict"] = verdict;
  }
  doc.csv_header = {"a1", "b1", "m2_1", "n2_1", "kk1", "chi1", "r1",        "a2",
                    "b2", "m2_2", "n2_2", "kk2", "chi2", "r2", "homeomorphic", "diffeo_verdict"};
  auto row = type_cells(first);
  row.insert(row.end(), {str(i1.kk), str(i1.chi), str(i1.r)});
  for (auto& c : type_cells(second)) row.push_back(std::move(c));
  row.insert(row.end(), {str(i2.kk), str(i2.chi), str(i2.r), homeo ? "true" : "false", verdict});
  doc.csv_rows.push_back(std::move(row));
  return doc;
}

Document check_tuple_document(std::span<const CoverType> types, TupleVerdict* verdict_out) {
  const TupleVerdict verdict = is_catanese_tuple(types);
  Document doc;
  doc.json = json{{"members", std::vector<CoverType>(types.begin(), types.end())},
                  {"verdict", verdict}};
  doc.csv_header = {"index", "a", "b", "m2", "n2", "kk", "chi", "r", "is_catanese"};
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto inv = surface_invariants(types[i]);
    std::vector<std::string> row{std::to_string(i)};
    for (auto& c : type_cells(types[i])) row.push_back(std::move(c));
    row.insert(row.end(),
               {str(inv.kk), str(inv.chi), str(inv.r), verdict.is_catanese ? "true" : "false"});
    doc.csv_rows.push_back(std::move(row));
  }
  if (verdict.is_catanese) {
    CataneseTuple tuple{verdict.shared_key, {}, verdict.indices};
    for (const auto& t : types) tuple.members.push_back(canonicalize(t));
    doc.records.emplace_back(RecordKind::Tuple, json(tuple));
  }
  if (verdict_out) *verdict_out = verdict;
  return doc;
}

Document discriminant_document(const CoverType& type, std::span<const std::int64_t> mults) {
  const CoverType t = validate_type(type);
  const auto inv = surface_invariants(t);
  std::vector<DiscriminantProfile> profiles;
  for (const auto m : mults) profiles.push_back(discriminant_profile(inv, m));

  Document doc;
  doc.json = json{{"type", t}, {"invariants", inv}, {"profiles", profiles}};
  doc.csv_header = kProfileHeader;
  for (const auto& p : profiles) doc.csv_rows.push_back(profile_cells(p));
  return doc;
}

Document certificate_document(const ZariskiCertificate& certificate) {
  Document doc;
  doc.json = certificate;
  doc.csv_header = {"kk", "chi", "members", "indices"};
  doc.csv_header.insert(doc.csv_header.end(), kProfileHeader.begin(), kProfileHeader.end());
  std::string members;
  for (std::size_t i = 0; i < certificate.members.size(); ++i) {
    if (i) members += ";";
    members += to_string(certificate.members[i]);
  }
  const std::vector<std::string> lead{str(certificate.shared.kk), str(certificate.shared.chi),
                                      members, joined(certificate.indices)};
  for (const auto& p : certificate.profiles) {
    auto row = lead;
    for (auto& c : profile_cells(p)) row.push_back(std::move(c));
    doc.csv_rows.push_back(std::move(row));
  }
  doc.records.emplace_back(RecordKind::Certificate, doc.json);
  return doc;
}

Document search_document(const SearchResult& result, const SearchConfig& cfg) {
  Document doc;
  json buckets = json::array();
  for (const auto& b : result.buckets) {
    buckets.push_back(json{{"key", b.key},
                           {"member_count", b.member_count},
                           {"distinct_indices", b.distinct_indices},
                           {"tuples_emitted", b.tuples_emitted},
                           {"truncated", b.truncated}});
  }
  doc.json = json{{"bound", cfg.bound},
                  {"k", cfg.k},
                  {"admissible_count", result.admissible_count},
                  {"class_count", result.class_count},
                  {"truncated", result.truncated},
                  {"buckets", buckets},
                  {"tuples", result.tuples}};
  doc.csv_header = {"tuple", "kk", "chi", "member", "a", "b", "m2", "n2", "r"};
  for (std::size_t i = 0; i < result.tuples.size(); ++i) {
    const auto& t = result.tuples[i];
    for (std::size_t j = 0; j < t.members.size(); ++j) {
      std::vector<std::string> row{std::to_string(i), str(t.key.kk), str(t.key.chi),
                                   std::to_string(j)};
      for (auto& c : type_cells(t.members[j])) row.push_back(std::move(c));
      row.push_back(str(t.indices[j]));
      doc.csv_rows.push_back(std::move(row));
    }
    doc.records.emplace_back(RecordKind::Tuple, json(t));
  }
  return doc;
}

Document reference_report_document(std::span<const std::int64_t> mults, bool* conforms_out) {
  const auto report = verify_reference_example(mults);
  Document doc;
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"field", e.field},
                           {"printed", e.printed},
                           {"computed", e.computed},
                           {"match", e.match},
                           {"expected_match", e.expected_match},
                           {"note", e.note}});
    doc.csv_rows.push_back({e.field, e.printed, e.computed, e.match ? "true" : "false",
                            e.expected_match ? "true" : "false", e.note});
  }
  doc.json = json{{"first", kReferenceFirst},
                  {"second", kReferenceSecond},
                  {"mults", report.mults},
                  {"conforms", report.conforms()},
                  {"entries", entries}};
  doc.csv_header = {"field", "printed", "computed", "match", "expected_match", "note"};
  if (conforms_out) *conforms_out = report.conforms();
  return doc;
}

}  // namespace bidouble
