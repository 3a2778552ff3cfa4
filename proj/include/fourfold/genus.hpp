#pragma once

// Riemann-Hurwitz over the subgroup lattice of the Galois group.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fourfold/cover_model.hpp"

namespace fourfold {

struct GenusTable {
  struct Entry {
    std::string curve;
    std::string subgroup;
    int genus;
  };
  struct Arrow {
    std::string from;  // W/H
    std::string to;    // W/K, with H a proper subgroup of K
    int degree;        // [K:H]
    int ram;           // |B(W/H -> W/K)|
  };

  int top_genus = 0;
  int base_genus = 0;
  std::vector<Entry> genera;  // curve order of the group model
  std::vector<Arrow> arrows;

  int genus(std::string_view curve) const;
  int ram(std::string_view from, std::string_view to) const;
};

// All of these throw Error(Parity) for parity-violating profiles.
int genus_top(const RamificationProfile& profile);
int genus_quotient(const RamificationProfile& profile, const Subgroup& h);
int genus_of(const RamificationProfile& profile, std::string_view curve);
// Throws Error(Containment) unless h is contained in k.
int ram_degree(const RamificationProfile& profile, const Subgroup& h, const Subgroup& k);
int ram_degree(const RamificationProfile& profile, std::string_view from, std::string_view to);
// Points of W fixed by h; throws Error(Domain) for the identity.
int fixed_points(const RamificationProfile& profile, const Perm& h);
GenusTable genus_table(const RamificationProfile& profile);

// Branch data of W -> W/H read as a profile of the target group case. The
// element set of H must equal the target model's embedding.
RamificationProfile restrict_profile(const RamificationProfile& profile, const Subgroup& h,
                                     GroupKind target);

// For a normal subgroup N: number of branch points of W/N -> W/G keyed by
// the order of the local monodromy in G/N (order 1 means unbranched).
std::map<int, int> quotient_branching(const RamificationProfile& profile, const Subgroup& n);

}  // namespace fourfold
