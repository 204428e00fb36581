// bidouble: command-line front end over the bidouble C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bidouble/bidouble.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "json";
  std::string out;
  bool no_timestamp = false;

  bd_format c_format() const { return format == "csv" ? BD_FORMAT_CSV : BD_FORMAT_JSON; }
};

struct UsageError {
  std::string message;
};

bd_cover_type parse_type(const std::string& text) {
  std::vector<std::int64_t> fields;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      fields.push_back(value);
    } catch (const std::exception&) {
      throw UsageError{"--type expects four comma-separated integers a,b,m2,n2, got '" + text +
                       "'"};
    }
  }
  if (fields.size() != 4 || (!text.empty() && text.back() == ',')) {
    throw UsageError{"--type expects four comma-separated integers a,b,m2,n2, got '" + text +
                     "'"};
  }
  return {fields[0], fields[1], fields[2], fields[3]};
}

std::vector<bd_cover_type> parse_types(const std::vector<std::string>& texts) {
  std::vector<bd_cover_type> out;
  for (const auto& t : texts) out.push_back(parse_type(t));
  return out;
}

int exit_code_for(bd_status status) {
  switch (status) {
    case BD_OK: return kExitOk;
    case BD_E_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

// Prints the document, appends its records to --out when requested, and
// maps the status to an exit code.
int finish(bd_status status, bd_document* doc, const OutputOptions& opts) {
  if (doc) std::fputs(bd_document_text(doc), stdout);
  if (status != BD_OK) {
    std::cerr << "error: " << bd_status_name(status) << ": " << bd_last_error() << "\n";
    bd_document_free(doc);
    return exit_code_for(status);
  }
  int code = kExitOk;
  if (!opts.out.empty() && doc && bd_document_record_count(doc) > 0) {
    bd_catalog* catalog = nullptr;
    bd_status s = bd_catalog_open(opts.out.c_str(), opts.no_timestamp ? 0 : 1, &catalog);
    if (s == BD_OK) s = bd_catalog_append(catalog, doc);
    bd_catalog_close(catalog);
    if (s != BD_OK) {
      std::cerr << "error: " << bd_status_name(s) << ": " << bd_last_error() << "\n";
      code = kExitDomain;
    } else {
      std::cerr << "wrote " << bd_document_record_count(doc) << " record(s) to " << opts.out
                << "\n";
    }
  }
  bd_document_free(doc);
  return code;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool with_catalog) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  if (with_catalog) {
    cmd->add_option("--out", opts.out, "Append result records to this JSONL catalog");
    cmd->add_flag("--no-timestamp", opts.no_timestamp, "Omit created_at from catalog records");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of simple bidouble covers of P1 x P1, Catanese tuple search and "
               "Zariski tuple certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bd_version()));

  OutputOptions opts;
  std::vector<std::string> type_texts;
  std::vector<std::int64_t> mults;
  std::int64_t bound = 0;
  std::int64_t k = 2;
  std::size_t shards = 1;
  std::size_t max_results = 0;

  auto* invariants = app.add_subcommand("invariants", "Surface invariants of one cover type");
  invariants->add_option("--type", type_texts, "Cover type a,b,m2,n2")->required()->expected(1);
  add_output_options(invariants, opts, true);

  auto* check_pair = app.add_subcommand("check-pair", "Homeomorphism and diffeomorphism check");
  check_pair->add_option("--type", type_texts, "Cover type a,b,m2,n2 (give twice)")
      ->required()
      ->expected(2);
  add_output_options(check_pair, opts, false);

  auto* check_tuple = app.add_subcommand("check-tuple", "Catanese tuple check");
  check_tuple->add_option("--type", type_texts, "Cover type a,b,m2,n2 (repeatable)")
      ->required()
      ->expected(2, 1 << 20);
  add_output_options(check_tuple, opts, true);

  auto* discriminant =
      app.add_subcommand("discriminant", "m-canonical branch curve data of one cover type");
  discriminant->add_option("--type", type_texts, "Cover type a,b,m2,n2")->required()->expected(1);
  discriminant->add_option("--m", mults, "Canonical multiple, at least 5 (repeatable)")
      ->required();
  add_output_options(discriminant, opts, false);

  auto* search = app.add_subcommand("search", "Search Catanese k-tuples in a bounded box");
  search->add_option("--bound", bound, "Inclusive cap on every field")->required();
  search->add_option("--k", k, "Tuple size")->capture_default_str();
  search->add_option("--shards", shards, "Enumeration partitions")->capture_default_str();
  search->add_option("--max-results", max_results, "Truncate after this many tuples (0: all)");
  add_output_options(search, opts, true);

  auto* certify = app.add_subcommand("certify", "Zariski tuple certificate for a Catanese tuple");
  certify->add_option("--type", type_texts, "Cover type a,b,m2,n2 (repeatable)")
      ->required()
      ->expected(2, 1 << 20);
  certify->add_option("--m", mults, "Canonical multiple, at least 5 (repeatable)");
  add_output_options(certify, opts, true);

  auto* verify = app.add_subcommand("verify-paper-example",
                                    "Recompute the published example pair and compare");
  verify->add_option("--m", mults, "Canonical multiple, at least 5 (repeatable)");
  add_output_options(verify, opts, false);

  for (auto* cmd : {invariants, check_pair, check_tuple, discriminant, search, certify, verify}) {
    cmd->allow_extras(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    std::cerr << failing->help();
    return kExitUsage;
  }

  try {
    const auto types = parse_types(type_texts);
    const auto fmt = opts.c_format();
    bd_document* doc = nullptr;

    bd_status status = BD_OK;
    if (invariants->parsed()) {
      status = bd_invariants_document(&types[0], fmt, &doc);
    } else if (check_pair->parsed()) {
      status = bd_check_pair_document(&types[0], &types[1], fmt, &doc);
    } else if (check_tuple->parsed()) {
      status = bd_check_tuple_document(types.data(), types.size(), fmt, &doc);
    } else if (discriminant->parsed()) {
      status = bd_discriminant_document(&types[0], mults.data(), mults.size(), fmt, &doc);
    } else if (certify->parsed()) {
      status = bd_certify_document(types.data(), types.size(), mults.data(), mults.size(), fmt,
                                   &doc);
    } else if (verify->parsed()) {
      status = bd_verify_paper_example_document(mults.data(), mults.size(), fmt, &doc);
    }
    if (doc) return finish(status, doc, opts);
    if (status != BD_OK) return finish(status, nullptr, opts);

    if (search->parsed()) {
      const bd_search_config cfg{bound, k, max_results, shards};
      bd_search* handle = nullptr;
      const bd_status s = bd_search_run(&cfg, &handle);
      if (s != BD_OK) return finish(s, nullptr, opts);
      status = bd_search_document(handle, fmt, &doc);
      const int truncated = bd_search_truncated(handle);
      bd_search_free(handle);
      if (truncated) std::cerr << "note: results truncated\n";
      return finish(status, doc, opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
