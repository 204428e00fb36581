#include "bidouble/bidouble.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bidouble/catalog.hpp"
#include "bidouble/discriminant.hpp"
#include "bidouble/document.hpp"
#include "bidouble/errors.hpp"
#include "bidouble/search.hpp"

struct bd_document {
  std::string text;
  std::vector<std::pair<bidouble::RecordKind, nlohmann::json>> records;
};

struct bd_search {
  bidouble::SearchConfig config;
  bidouble::SearchResult result;
};

struct bd_catalog {
  bidouble::CatalogWriter writer;
  bool with_timestamp;
};

namespace {

using namespace bidouble;

thread_local std::string last_error;

bd_status to_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConstraintViolation: return BD_E_CONSTRAINT_VIOLATION;
    case ErrorCode::OutOfRange: return BD_E_OUT_OF_RANGE;
    case ErrorCode::Overflow: return BD_E_OVERFLOW;
    case ErrorCode::NotComparable: return BD_E_NOT_COMPARABLE;
    case ErrorCode::InvalidMember: return BD_E_INVALID_MEMBER;
    case ErrorCode::NotCatanese: return BD_E_NOT_CATANESE;
    case ErrorCode::MultTooSmall: return BD_E_MULT_TOO_SMALL;
    case ErrorCode::NegativeNodes: return BD_E_NEGATIVE_NODES;
    case ErrorCode::BoundTooLarge: return BD_E_BOUND_TOO_LARGE;
    case ErrorCode::InvalidArgument: return BD_E_INVALID_ARGUMENT;
    case ErrorCode::IoError: return BD_E_IO;
    case ErrorCode::SchemaMismatch: return BD_E_SCHEMA_MISMATCH;
  }
  return BD_E_INTERNAL;
}

CoverType from_c(const bd_cover_type& t) { return {t.a, t.b, t.m2, t.n2}; }

Format from_c(bd_format f) { return f == BD_FORMAT_CSV ? Format::Csv : Format::Json; }

bd_status fail(bd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

bd_status null_argument(const char* name) {
  return fail(BD_E_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

bd_document* make_document(const Document& doc, Format format) {
  auto* out = new bd_document;
  out->text = doc.render(format);
  out->records = doc.records;
  return out;
}

// Runs `body`, translating exceptions into status codes. Domain errors also
// produce an error document when `out` is given.
template <class Body>
bd_status guarded(bd_document** out, Format format, Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    if (out) {
      try {
        *out = make_document(error_document(e), format);
      } catch (...) {
        *out = nullptr;
      }
    }
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BD_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BD_E_INTERNAL, e.what());
  } catch (...) {
    return fail(BD_E_INTERNAL, "unknown exception");
  }
}

std::vector<CoverType> types_from_c(const bd_cover_type* types, std::size_t count) {
  std::vector<CoverType> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(from_c(types[i]));
  return out;
}

}  // namespace

extern "C" {

const char* bd_status_name(bd_status status) {
  switch (status) {
    case BD_OK: return "Ok";
    case BD_E_CONSTRAINT_VIOLATION: return "ConstraintViolation";
    case BD_E_OUT_OF_RANGE: return "OutOfRange";
    case BD_E_OVERFLOW: return "Overflow";
    case BD_E_NOT_COMPARABLE: return "NotComparable";
    case BD_E_INVALID_MEMBER: return "InvalidMember";
    case BD_E_NOT_CATANESE: return "NotCatanese";
    case BD_E_MULT_TOO_SMALL: return "MultTooSmall";
    case BD_E_NEGATIVE_NODES: return "NegativeNodes";
    case BD_E_BOUND_TOO_LARGE: return "BoundTooLarge";
    case BD_E_INVALID_ARGUMENT: return "InvalidArgument";
    case BD_E_IO: return "IoError";
    case BD_E_SCHEMA_MISMATCH: return "SchemaMismatch";
    case BD_E_BASELINE_MISMATCH: return "BaselineMismatch";
    case BD_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* bd_last_error(void) { return last_error.c_str(); }

const char* bd_version(void) { return "1.0.0"; }

bd_status bd_validate_type(const bd_cover_type* type, bd_cover_type* canonical_out) {
  if (!type) return null_argument("type");
  return guarded(nullptr, Format::Json, [&] {
    const CoverType c = canonicalize(validate_type(from_c(*type)));
    if (canonical_out) *canonical_out = {c.a, c.b, c.m2, c.n2};
    return BD_OK;
  });
}

bd_status bd_compute_invariants(const bd_cover_type* type, bd_surface_invariants* out) {
  if (!type || !out) return null_argument(!type ? "type" : "out");
  return guarded(nullptr, Format::Json, [&] {
    const CoverType t = validate_type(from_c(*type));
    const auto p = derive_params(t);
    const auto inv = surface_invariants(t);
    *out = {p.u,       p.v,      p.w,      p.z,          inv.kk,       inv.chi, inv.euler,
            inv.sigma, inv.b2,   inv.b_plus, inv.b_minus, inv.p_g,     inv.r};
    return BD_OK;
  });
}

bd_status bd_are_homeomorphic(const bd_cover_type* lhs, const bd_cover_type* rhs, int* out) {
  if (!lhs || !rhs || !out) return null_argument("lhs/rhs/out");
  return guarded(nullptr, Format::Json, [&] {
    *out = are_homeomorphic(surface_invariants(validate_type(from_c(*lhs))),
                            surface_invariants(validate_type(from_c(*rhs))))
               ? 1
               : 0;
    return BD_OK;
  });
}

bd_status bd_diffeo_obstruction(const bd_cover_type* lhs, const bd_cover_type* rhs,
                                bd_diffeo_verdict* out) {
  if (!lhs || !rhs || !out) return null_argument("lhs/rhs/out");
  return guarded(nullptr, Format::Json, [&] {
    const auto v = diffeo_obstruction(surface_invariants(validate_type(from_c(*lhs))),
                                      surface_invariants(validate_type(from_c(*rhs))));
    *out = v == DiffeoVerdict::NotDiffeomorphic ? BD_NOT_DIFFEOMORPHIC : BD_INCONCLUSIVE;
    return BD_OK;
  });
}

bd_status bd_invariants_document(const bd_cover_type* type, bd_format format, bd_document** out) {
  if (!type || !out) return null_argument("type/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    *out = make_document(invariants_document(from_c(*type)), from_c(format));
    return BD_OK;
  });
}

bd_status bd_check_pair_document(const bd_cover_type* lhs, const bd_cover_type* rhs,
                                 bd_format format, bd_document** out) {
  if (!lhs || !rhs || !out) return null_argument("lhs/rhs/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    *out = make_document(check_pair_document(from_c(*lhs), from_c(*rhs)), from_c(format));
    return BD_OK;
  });
}

bd_status bd_check_tuple_document(const bd_cover_type* types, std::size_t count,
                                  bd_format format, bd_document** out) {
  if ((!types && count) || !out) return null_argument("types/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    const auto members = types_from_c(types, count);
    TupleVerdict verdict;
    *out = make_document(check_tuple_document(members, &verdict), from_c(format));
    if (!verdict.is_catanese) {
      return fail(BD_E_NOT_CATANESE, Error(ErrorCode::NotCatanese, verdict.failures).what());
    }
    return BD_OK;
  });
}

bd_status bd_discriminant_document(const bd_cover_type* type, const int64_t* mults,
                                   std::size_t mult_count, bd_format format, bd_document** out) {
  if (!type || (!mults && mult_count) || !out) return null_argument("type/mults/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    const std::vector<std::int64_t> ms(mults, mults + mult_count);
    *out = make_document(discriminant_document(from_c(*type), ms), from_c(format));
    return BD_OK;
  });
}

bd_status bd_certify_document(const bd_cover_type* types, std::size_t count,
                              const int64_t* mults, std::size_t mult_count, bd_format format,
                              bd_document** out) {
  if ((!types && count) || (!mults && mult_count) || !out) return null_argument("types/mults/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    const auto members = types_from_c(types, count);
    const std::vector<std::int64_t> ms(mults, mults + mult_count);
    *out = make_document(certificate_document(zariski_certificate(members, ms)), from_c(format));
    return BD_OK;
  });
}

bd_status bd_verify_paper_example_document(const int64_t* mults, std::size_t mult_count,
                                           bd_format format, bd_document** out) {
  if ((!mults && mult_count) || !out) return null_argument("mults/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    const std::vector<std::int64_t> ms(mults, mults + mult_count);
    bool conforms = false;
    *out = make_document(reference_report_document(ms, &conforms), from_c(format));
    if (!conforms) {
      return fail(BD_E_BASELINE_MISMATCH, "reference example deviates from the documented baseline");
    }
    return BD_OK;
  });
}

const char* bd_document_text(const bd_document* doc) { return doc ? doc->text.c_str() : ""; }

std::size_t bd_document_record_count(const bd_document* doc) {
  return doc ? doc->records.size() : 0;
}

void bd_document_free(bd_document* doc) { delete doc; }

bd_status bd_search_run(const bd_search_config* config, bd_search** out) {
  if (!config || !out) return null_argument("config/out");
  *out = nullptr;
  return guarded(nullptr, Format::Json, [&] {
    auto handle = std::make_unique<bd_search>();
    handle->config.bound = config->bound;
    handle->config.k = config->k;
    handle->config.shard_count = config->shard_count;
    if (config->max_results) handle->config.max_results = config->max_results;
    handle->result = search(handle->config);
    *out = handle.release();
    return BD_OK;
  });
}

std::size_t bd_search_tuple_count(const bd_search* s) { return s ? s->result.tuples.size() : 0; }

std::size_t bd_search_tuple_members(const bd_search* s, std::size_t index, bd_cover_type* members,
                                    int64_t* indices, std::size_t capacity) {
  if (!s || index >= s->result.tuples.size()) return 0;
  const auto& tuple = s->result.tuples[index];
  for (std::size_t i = 0; i < tuple.members.size() && i < capacity; ++i) {
    const auto& t = tuple.members[i];
    if (members) members[i] = {t.a, t.b, t.m2, t.n2};
    if (indices) indices[i] = tuple.indices[i];
  }
  return tuple.members.size();
}

int bd_search_truncated(const bd_search* s) { return s && s->result.truncated ? 1 : 0; }

bd_status bd_search_document(const bd_search* s, bd_format format, bd_document** out) {
  if (!s || !out) return null_argument("search/out");
  *out = nullptr;
  return guarded(out, from_c(format), [&] {
    *out = make_document(search_document(s->result, s->config), from_c(format));
    return BD_OK;
  });
}

void bd_search_free(bd_search* s) { delete s; }

bd_status bd_catalog_open(const char* path, int with_timestamp, bd_catalog** out) {
  if (!path || !out) return null_argument("path/out");
  *out = nullptr;
  return guarded(nullptr, Format::Json, [&] {
    *out = new bd_catalog{CatalogWriter(path), with_timestamp != 0};
    return BD_OK;
  });
}

bd_status bd_catalog_append(bd_catalog* catalog, const bd_document* doc) {
  if (!catalog || !doc) return null_argument("catalog/doc");
  return guarded(nullptr, Format::Json, [&] {
    for (const auto& [kind, payload] : doc->records) {
      catalog->writer.append(make_record(kind, payload, catalog->with_timestamp));
    }
    return BD_OK;
  });
}

void bd_catalog_close(bd_catalog* catalog) { delete catalog; }

bd_status bd_catalog_read(const char* path, bd_document** out) {
  if (!path || !out) return null_argument("path/out");
  *out = nullptr;
  return guarded(out, Format::Json, [&] {
    nlohmann::json records = nlohmann::json::array();
    auto doc = std::make_unique<bd_document>();
    for (const auto& r : read_catalog(path)) {
      records.push_back(nlohmann::json::parse(encode_record(r)));
      doc->records.emplace_back(r.kind, r.payload);
    }
    doc->text = records.dump(2) + "\n";
    *out = doc.release();
    return BD_OK;
  });
}

}  // extern "C"
