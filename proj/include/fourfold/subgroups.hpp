#pragma once

// The 30 subgroups of S4, hard-coded by family, plus coset actions.

#include <string>
#include <vector>

#include "fourfold/perm.hpp"

namespace fourfold {

enum class SubgroupFamily {
  Trivial,
  T2,           // <(k l)>
  T2x2,         // <(j k)(l m)>
  C3,           // <(j k l)>
  C4,           // <(1 k j l)>
  KleinNormal,  // {e, (12)(34), (13)(24), (14)(23)}
  Klein,        // <(1 j)(k l), (k l)>
  S3,           // stabilizer of a point n
  D4,           // <(1 k j l), (k l)>
  A4,
  S4
};

struct Subgroup {
  std::string name;
  SubgroupFamily family;
  PermSet elements;

  int order() const { return static_cast<int>(elements.count()); }
  bool contains(const Perm& p) const { return elements.test(p.index()); }
  bool contains(const Subgroup& h) const { return (h.elements & ~elements).none(); }
};

// All 30 subgroups with canonical names, e.g. "T2(3 4)", "C4(1 3 2 4)",
// "KLEIN(2)", "S3(1)", "D4(2)". Ordered by order, then name.
const std::vector<Subgroup>& subgroup_catalog();

// Throws Error(Catalog) for names outside the catalog.
const Subgroup& subgroup_by_name(const std::string& name);
std::vector<Perm> subgroup_elements(const std::string& name);

// Catalog entry whose element set equals the closure of the generators.
const Subgroup& subgroup_generated_by(const std::vector<Perm>& generators);
const Subgroup& subgroup_with_elements(const PermSet& elements);

struct CosetOrbit {
  int length;
  Perm representative;  // x with x*H in the orbit
};

// Orbits of <c> acting by left multiplication on the left cosets G/H.
// Throws Error(Containment) if H is not in G or c is not in G.
std::vector<CosetOrbit> coset_orbits(const Subgroup& g, const Subgroup& h, const Perm& c);
// Orbit lengths, sorted descending.
std::vector<int> coset_cycle_type(const Subgroup& g, const Subgroup& h, const Perm& c);

bool is_normal_in(const Subgroup& n, const Subgroup& g);
bool is_transitive(const PermSet& group);

}  // namespace fourfold
