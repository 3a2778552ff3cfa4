#pragma once

// Group cases, their branch symbols and curve names, and ramification
// profiles with the parity and genus-zero connectivity checks.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fourfold/perm.hpp"
#include "fourfold/subgroups.hpp"

namespace fourfold {

enum class GroupKind { Cyclic4, Klein, Dihedral8, Alt4, Sym4, Sym3 };

std::string_view kind_name(GroupKind kind);
GroupKind parse_kind(std::string_view name);  // throws Error(Schema)
int group_order(GroupKind kind);
const std::vector<GroupKind>& all_kinds();

struct BranchSymbol {
  std::string name;        // config key, e.g. "gamma1"
  std::string display;     // e.g. "γ1"
  Perm representative;     // local monodromy in the group's embedding
  PermSet candidates;      // every element a point of this type may carry
  int units_per_point = 1; // the cyclic gamma counts fixed points, two per point
};

struct CurveSpec {
  std::string name;      // e.g. "W", "X_sigma", "Delta"
  std::string subgroup;  // catalog name of the stabilizer H, curve = W/H
};

struct GroupModel {
  GroupKind kind;
  const Subgroup* group;
  std::vector<BranchSymbol> symbols;
  std::vector<CurveSpec> curves;  // top curve first, base curve last

  const BranchSymbol& symbol(std::string_view name) const;
  std::size_t symbol_index(std::string_view name) const;
  const CurveSpec& curve(std::string_view name) const;
  const Subgroup& curve_subgroup(std::string_view name) const;
  const std::string& top_curve() const { return curves.front().name; }
  const std::string& base_curve() const { return curves.back().name; }
};

const GroupModel& group_model(GroupKind kind);

class RamificationProfile {
 public:
  // Missing symbols count as 0. Unknown symbols or negative values throw
  // Error(Schema).
  RamificationProfile(GroupKind kind, int base_genus, const std::map<std::string, int>& counts = {});

  GroupKind kind() const { return kind_; }
  int base_genus() const { return g_; }
  const GroupModel& model() const { return group_model(kind_); }

  // Value as written in the formulas (the cyclic gamma is a fixed-point count).
  int count(std::string_view symbol) const;
  int count_at(std::size_t index) const { return counts_[index]; }
  // Number of branch points of the given symbol. Throws Error(Parity) for an
  // odd cyclic gamma.
  int points_at(std::size_t index) const;
  int gamma_half() const;  // cyclic only

  std::map<std::string, int> counts() const;
  std::string to_string() const;

  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  GroupKind kind_;
  int g_;
  std::vector<int> counts_;
};

struct Violation {
  enum class Type { Parity, Connectivity };
  Type type;
  std::string rule;  // e.g. "alpha+delta = 0 mod 2", "beta >= 1"
};

// Exhaustive list of violated parity rules and, when g = 0, violated
// connectivity minima.
std::vector<Violation> validate(const RamificationProfile& profile);
bool parity_valid(const RamificationProfile& profile);

struct SignatureType {
  int genus = 0;
  std::vector<int> periods;
  std::string to_string() const;
  friend bool operator==(const SignatureType&, const SignatureType&) = default;
};

// Throws Error(Parity) when the parity rules fail.
SignatureType signature(const RamificationProfile& profile);
int branch_count(const RamificationProfile& profile);

}  // namespace fourfold
