#pragma once

// Finite models of d-torsion as (Z/d)^(2g) with the standard alternating
// form, materialized submodules, and the torsion bookkeeping built on them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/factored.hpp"

namespace fourfold {

using Vec = std::uint32_t;  // coordinates packed in base d, coordinate 0 lowest

class SympModule {
 public:
  // Throws Error(Domain) unless d is 2, 3 or 4 and d^(2g) <= 2^20.
  SympModule(int g, int d);

  int g() const { return g_; }
  int d() const { return d_; }
  int rank() const { return 2 * g_; }
  std::uint32_t size() const { return size_; }

  int coord(Vec x, int i) const;
  Vec make(const std::vector<int>& coords) const;  // reduced mod d
  Vec basis(int i) const;                          // e_i, 0 <= i < 2g
  Vec add(Vec x, Vec y) const;
  Vec neg(Vec x) const;
  // e(x, y) = sum_i x_i y_(g+i) - x_(g+i) y_i mod d.
  int form(Vec x, Vec y) const;

  friend bool operator==(const SympModule& a, const SympModule& b) { return a.g_ == b.g_ && a.d_ == b.d_; }

 private:
  int g_;
  int d_;
  std::uint32_t size_;
  std::vector<std::uint32_t> place_;  // d^i
};

class SubModule {
 public:
  const SympModule& parent() const { return *parent_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Vec>& elements() const { return elems_; }  // sorted
  std::size_t size() const { return elems_.size(); }
  bool contains(Vec x) const { return member_[x] != 0; }
  bool contains(const SubModule& o) const;

  friend bool operator==(const SubModule& a, const SubModule& b) { return a.elems_ == b.elems_; }

  friend SubModule span(const SympModule& m, const std::vector<Vec>& gens);
  friend SubModule from_elements(const SympModule& m, const std::vector<Vec>& elems);

 private:
  const SympModule* parent_ = nullptr;
  std::vector<Vec> gens_;
  std::vector<Vec> elems_;
  std::vector<char> member_;
};

SubModule span(const SympModule& m, const std::vector<Vec>& gens);
// The elements must form a subgroup; throws Error(Domain) otherwise.
SubModule from_elements(const SympModule& m, const std::vector<Vec>& elems);
SubModule sum(const SubModule& a, const SubModule& b);
SubModule intersection(const SubModule& a, const SubModule& b);
SubModule orthogonal(const SubModule& s);
bool is_isotropic(const SubModule& s);

// Cardinality of the quotient a/b; throws Error(Domain) unless b is in a.
std::uint64_t quotient_size(const SubModule& a, const SubModule& b);

struct CardinalityLaw {
  std::uint64_t size = 0;
  std::uint64_t perp_size = 0;
  bool holds = false;
};
// Throws Error(Internal) if |S| |S^perp| differs from d^(2g).
CardinalityLaw cardinality_law_check(const SubModule& s);

// Every submodule, by closure from {0}; throws Error(Domain) above 2^12
// elements in the ambient module.
std::vector<SubModule> all_submodules(const SympModule& m);
std::vector<SubModule> maximal_isotropic(const SympModule& m);

// 2-torsion configurations of a Klein cover X -> T, modelled inside JT[2].
enum class KleinTorsionCase { Ia, Ib, II, III, IVa, IVb };
std::string_view case_name(KleinTorsionCase c);
KleinTorsionCase parse_case(std::string_view name);

struct KleinTorsionQuantity {
  std::string name;  // e.g. "ker phi_sigma"
  int log2 = 0;      // cardinality is 2^log2
  bool from_model = false;  // computed inside the finite model, not by counting generators
};

struct KleinTorsionModel {
  KleinTorsionCase which;
  int g_T = 0;
  int r = 0, s = 0, t = 0;
  std::vector<KleinTorsionQuantity> quantities;
  std::vector<std::string> notes;

  int log2(std::string_view name) const;  // throws Error(Catalog) if absent
};

// Throws Error(Domain) if the counts do not fit the case or g_T is too small
// for the case's configuration (Case Ia needs g_T >= 2).
KleinTorsionModel klein_torsion_model(KleinTorsionCase which, int g_T, int r = 0, int s = 0, int t = 0);
// Case I with explicit eta_sigma, eta_tau in (Z/2)^(2 g_T).
KleinTorsionModel klein_torsion_case_one(const SympModule& jt2, Vec eta_sigma, Vec eta_tau);

struct P2Structure {
  int g = 0;
  int omega = 0;
  int pullback_dim = 0;   // F2-dimension of f^*(J[2]) inside P[2] (or H^perp/H)
  int generator_dim = 0;  // extra generators from ramification
  int total_dim = 0;
  int expected_dim = 0;   // 2 dim P = 2(g - 1 + omega/2)
};
// Throws Error(Domain) for odd omega or an unramified double cover of P^1.
P2Structure p2_structure_count(int g, int omega);

// |L| for a cyclic triple cover with alpha branch points over genus g.
FactoredCard degree3_L_count(int g, int alpha);

}  // namespace fourfold
