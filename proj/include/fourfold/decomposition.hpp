#pragma once

// Isogeny factors of the top Jacobian and the kernel cardinalities of the
// equivariant sum maps, evaluated from the ramification profile.

#include <optional>
#include <string>
#include <vector>

#include "fourfold/cover_model.hpp"
#include "fourfold/factored.hpp"
#include "fourfold/genus.hpp"

namespace fourfold {

struct IsogenyFactor {
  std::string label;      // "JT", "P(S/R)", ...
  int multiplicity = 1;
  int dim = 0;
  std::string rep_label;  // irreducible representation acting on the factor
  std::string top;        // curve pair defining the factor
  std::string bottom;     // empty for a Jacobian
};

std::vector<IsogenyFactor> factors(const RamificationProfile& profile);
std::vector<IsogenyFactor> factors(const RamificationProfile& profile, const GenusTable& table);

// Facts about a specific cover that the numerical data cannot decide.
struct CaseFlags {
  std::optional<bool> g_isotropic;  // bigonal and S4 Z/C tables
  std::optional<bool> p2_in_perp;   // "Prym 2-torsion inside the orthogonal" rows
  std::optional<int> zeta;          // 0 or 1, trigonal table
};

struct KernelAlternative {
  std::string condition;
  FactoredCard value;
};

struct KernelResult {
  std::string name;
  std::string case_label;
  std::optional<FactoredCard> value;             // set when the case is decided
  std::vector<KernelAlternative> alternatives;   // set when a needed flag is absent
  std::vector<std::string> flags_used;
  std::vector<std::string> warnings;
  std::string error;  // set when the formula is undefined for the profile

  bool conditional() const { return !value.has_value() && error.empty(); }
};

enum class KleinQuotient { Sigma, Tau, SigmaTau };

// Rules for a Klein cover X -> T over base genus gT, usable on any
// Klein sub-cover. b_* are ramification orders |B(X -> X_j)|, and r, s, t
// are the numbers of branch points of each involution.
namespace klein_rules {
FactoredCard pair(int gT, int b_j, int b_k, int b_l);
FactoredCard varphi(int gT, int r, int s, int t);
FactoredCard main(int gT, int r, int s, int t);
FactoredCard pullback_kernel(int r, int s, int t);
}  // namespace klein_rules

// Main equivariant isogeny of each case; needs no flags.
KernelResult kernel_main_result(const RamificationProfile& profile);
FactoredCard kernel_main(const RamificationProfile& profile);

FactoredCard kernel_klein_pair(const RamificationProfile& profile, KleinQuotient j);
FactoredCard kernel_klein_varphi(const RamificationProfile& profile);
FactoredCard kernel_klein_pullback(const RamificationProfile& profile);

KernelResult kernel_bigonal(const RamificationProfile& profile, std::optional<bool> g_isotropic);
KernelResult kernel_trigonal_a4(const RamificationProfile& profile, std::optional<bool> p2_in_perp);
KernelResult kernel_s4_iii(const RamificationProfile& profile, std::optional<bool> p2_in_perp);
KernelResult kernel_s4_iv(const RamificationProfile& profile, std::optional<bool> g_isotropic);
KernelResult kernel_s4_v(const RamificationProfile& profile, std::optional<int> zeta);

// Second evaluation paths built from sub-covers of the lattice.
struct S4Stagewise {
  FactoredCard phi_u;     // JU[4] over the pullback kernel of W -> U
  FactoredCard phi_s3;    // S3 isogeny of U -> T
  FactoredCard nu_sum;    // Klein map of W -> U
  FactoredCard pair_sum;  // Klein pair map of C -> R, taken three times
  FactoredCard product;
};
S4Stagewise kernel_s4_stagewise(const RamificationProfile& profile);
FactoredCard kernel_a4_stagewise(const RamificationProfile& profile);
KernelResult kernel_s4_iii_via_a4(const RamificationProfile& profile, std::optional<bool> p2_in_perp);
KernelResult kernel_s4_iv_via_d4(const RamificationProfile& profile, std::optional<bool> g_isotropic);

struct CompositionCheck {
  bool consistent = false;
  std::optional<FactoredCard> psi_direct;    // |JY[f]|/|ker f*| * |JZ[g]|/|ker g*|
  std::optional<FactoredCard> psi_via_prym;  // |JZ[h]| |P(Y/Z)[f]| / (|ker f*| |ker g*|)
  std::optional<FactoredCard> phi_direct;    // |ker psi| / |ker gamma|
  std::optional<FactoredCard> phi_via_prym;  // |P(Y/Z)[f]| |g*JZ cap ker f*| / |ker f*|
  std::string detail;
};

CompositionCheck composition_identity(int g_y, int g_z, int deg_f, int deg_g, FactoredCard ker_f,
                                      FactoredCard ker_g, FactoredCard ker_h);

// |J[d]| = d^(2 genus); d must be of the form 2^a 3^b.
FactoredCard torsion_card(int genus, int d);

struct DecompositionReport {
  std::vector<IsogenyFactor> factors;
  int dimension_total = 0;
  KernelResult main;
  std::vector<KernelResult> secondary;
};

// Throws Error(Schema) if a supplied flag is not consulted for this profile.
// A kernel formula that is undefined for the profile is reported in that
// kernel's error field instead of throwing.
DecompositionReport decompose(const RamificationProfile& profile, const CaseFlags& flags = {});
std::vector<std::string> unconsumed_flags(const RamificationProfile& profile, const CaseFlags& flags);

}  // namespace fourfold
