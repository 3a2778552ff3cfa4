#pragma once

// Hurwitz tuples: verification, existence search and image classification.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/cover_model.hpp"

namespace fourfold {

struct HurwitzTuple {
  int base_genus = 0;
  std::vector<std::pair<Perm, Perm>> handles;
  std::vector<Perm> branch;         // symbol blocks in model order
  std::vector<std::string> labels;  // symbol name of each branch entry
};

enum class SearchMode { GaloisImage, TransitiveImage };
std::string_view mode_name(SearchMode mode);
SearchMode parse_mode(std::string_view name);  // throws Error(Schema)

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> diagnostics;  // one line per failed condition
};

// Throws Error(Schema) when the tuple shape does not match the profile.
VerifyResult verify_tuple(const HurwitzTuple& tuple, const RamificationProfile& profile,
                          SearchMode mode = SearchMode::GaloisImage);

// Product [a_1,b_1]...[a_g,b_g] and sigma_1...sigma_n.
Perm handle_product(const HurwitzTuple& tuple);
Perm branch_product(const HurwitzTuple& tuple);
PermSet generated_group(const HurwitzTuple& tuple);

// Transitive images up to conjugacy in S4, or "INTRANSITIVE".
std::string classify_image(const HurwitzTuple& tuple);
std::string classify_group(const PermSet& group);

struct SearchOutcome {
  enum class Status { Witness, ExhaustedNone, BudgetExceeded };
  Status status = Status::ExhaustedNone;
  std::optional<HurwitzTuple> witness;
  std::uint64_t nodes_explored = 0;
  int max_depth = 0;  // deepest branch position assigned
};
std::string_view status_name(SearchOutcome::Status status);

struct SearchOptions {
  SearchMode mode = SearchMode::GaloisImage;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
};

// Parity-violating profiles end as ExhaustedNone before any node is explored,
// since no product of admissible entries reaches the commutator set. An odd
// cyclic gamma throws Error(Parity) because it names no whole branch point.
SearchOutcome search(const RamificationProfile& profile, const SearchOptions& options = {});

// 3g - 3 + omega; throws Error(Domain) on a degenerate stratum.
int moduli_dim(const RamificationProfile& profile);

// Cycle-notation serialization with block labels.
std::vector<std::pair<std::string, std::string>> serialize(const HurwitzTuple& tuple);
HurwitzTuple deserialize(int base_genus, const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace fourfold
