#pragma once

// Config ingestion, analysis reports, golden-table reproduction and the
// verification suite runner. JSON documents keep a stable key order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fourfold/decomposition.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/monodromy.hpp"

namespace fourfold {

using Json = nlohmann::ordered_json;

struct AnalysisRequest {
  RamificationProfile profile{GroupKind::Sym4, 0};
  CaseFlags flags;
  bool want_witness = false;
  std::uint64_t budget = 100'000'000;
  SearchMode mode = SearchMode::GaloisImage;
  int threads = 1;
};

// Flat "key = value" text (lines starting with ';' are comments). Keys: group, g, the
// group's symbol names, g_isotropic, p2_in_perp, zeta, budget,
// want_witness, mode, threads. Throws Error(Parse) for malformed text and
// Error(Schema) for unknown keys, missing group, or flags the profile does
// not consume.
AnalysisRequest parse_request(std::istream& in);
AnalysisRequest load_request(const std::string& path);

struct AnalysisReport {
  Json doc;
  bool valid = true;             // false when parity rules fail
  bool budget_exceeded = false;  // search stopped without a witness
};

AnalysisReport analyze(const AnalysisRequest& request);
std::string render_text(const Json& analysis);

Json kernel_json(const KernelResult& k);
Json card_json(const FactoredCard& c);
Json witness_json(const HurwitzTuple& tuple, GroupKind kind);
// Accepts a bare witness object or a document holding one under "witness".
HurwitzTuple witness_from_json(const Json& doc);
Json search_json(const RamificationProfile& profile, const SearchOutcome& outcome,
                 const SearchOptions& options, bool include_witness = true);
Json error_json(const Error& e);
std::string_view error_kind_name(ErrorKind kind);
Json list_groups();

// Embedded golden tables, parsed with comments allowed.
const std::vector<std::string>& golden_names();
Json golden(std::string_view name);  // throws Error(Catalog)
const std::string& golden_text(std::string_view name);

// Profiles with an empty violation list, drawn from a fixed-seed generator.
std::vector<RamificationProfile> random_valid_profiles(GroupKind kind, int count, std::uint64_t seed,
                                                       int max_g = 5, int max_count = 6);

struct TableReport {
  std::string id;
  Json rows = Json::array();
  std::vector<std::string> mismatches;
  int cells_checked = 0;

  bool ok() const { return mismatches.empty(); }
  Json to_json() const;
};

const std::vector<std::string>& table_ids();
TableReport reproduce_table(std::string_view id);  // throws Error(Catalog)

enum class SuiteScope { Fast, Exhaustive };
SuiteScope parse_scope(std::string_view name);  // throws Error(Schema)

struct SuiteCheck {
  std::string name;
  bool ok = true;
  bool informational = false;  // reported, never counted as a failure
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string scope;
  std::vector<SuiteCheck> checks;

  bool ok() const;
  Json to_json() const;
};

SuiteReport verify_suite(SuiteScope scope);

}  // namespace fourfold
