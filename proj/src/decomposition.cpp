#include "fourfold/decomposition.hpp"

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

FactoredCard card(long long e2, long long e3, const std::string& what) {
  if (e2 < 0 || e3 < 0) {
    throw Error(ErrorKind::Domain, what + " evaluates to 2^" + std::to_string(e2) + "*3^" +
                                       std::to_string(e3) +
                                       "; the profile does not describe a connected cover");
  }
  return FactoredCard(e2, e3);
}

FactoredCard card2(long long e2, const std::string& what) { return card(e2, 0, what); }

void require(const RamificationProfile& p, GroupKind kind, const char* what) {
  if (p.kind() != kind) {
    throw Error(ErrorKind::Schema, std::string(what) + " needs a " + std::string(kind_name(kind)) +
                                       " profile, got " + std::string(kind_name(p.kind())));
  }
  if (!parity_valid(p)) throw Error(ErrorKind::Parity, "profile violates parity: " + p.to_string());
}

KernelResult decided(std::string name, std::string label, FactoredCard v) {
  KernelResult r;
  r.name = std::move(name);
  r.case_label = std::move(label);
  r.value = v;
  return r;
}

// Picks between two values depending on an optional flag.
KernelResult by_flag(std::string name, const std::string& flag, std::optional<bool> value,
                     const std::string& label_true, FactoredCard v_true,
                     const std::string& label_false, FactoredCard v_false,
                     const std::string& cond_true, const std::string& cond_false) {
  KernelResult r;
  r.name = std::move(name);
  if (value.has_value()) {
    r.flags_used.push_back(flag);
    r.case_label = *value ? label_true : label_false;
    r.value = *value ? v_true : v_false;
  } else {
    r.case_label = label_true + " | " + label_false;
    r.alternatives = {{cond_true, v_true}, {cond_false, v_false}};
  }
  return r;
}

IsogenyFactor factor(const GenusTable& t, std::string top, std::string bottom, int mult,
                     std::string rep) {
  IsogenyFactor f;
  f.multiplicity = mult;
  f.rep_label = std::move(rep);
  if (bottom.empty()) {
    f.label = "J" + top;
    f.dim = t.genus(top);
  } else {
    f.label = "P(" + top + "/" + bottom + ")";
    f.dim = t.genus(top) - t.genus(bottom);
  }
  f.top = std::move(top);
  f.bottom = std::move(bottom);
  return f;
}

}  // namespace

std::vector<IsogenyFactor> factors(const RamificationProfile& profile) {
  return factors(profile, genus_table(profile));
}

std::vector<IsogenyFactor> factors(const RamificationProfile& p, const GenusTable& t) {
  switch (p.kind()) {
    case GroupKind::Cyclic4:
      return {factor(t, "T", "", 1, "trivial"), factor(t, "F", "T", 1, "g -> -1"),
              factor(t, "X", "F", 1, "g -> i and g -> -i")};
    case GroupKind::Klein:
      return {factor(t, "T", "", 1, "trivial"),
              factor(t, "X_sigma", "T", 1, "character with kernel <sigma>"),
              factor(t, "X_tau", "T", 1, "character with kernel <tau>"),
              factor(t, "X_sigmatau", "T", 1, "character with kernel <sigma tau>")};
    case GroupKind::Dihedral8:
      return {factor(t, "T", "", 1, "trivial"),
              factor(t, "W_r", "T", 1, "character with kernel <r>"),
              factor(t, "W_Ks", "T", 1, "character with kernel <r^2, s>"),
              factor(t, "W_Krs", "T", 1, "character with kernel <r^2, rs>"),
              factor(t, "W_s", "W_Ks", 2, "two-dimensional")};
    case GroupKind::Alt4:
      return {factor(t, "Delta", "", 1, "trivial"),
              factor(t, "U", "Delta", 1, "pair of nontrivial characters"),
              factor(t, "C", "U", 3, "three-dimensional")};
    case GroupKind::Sym4:
      return {factor(t, "T", "", 1, "trivial"), factor(t, "Delta", "T", 1, "sign"),
              factor(t, "R", "T", 2, "two-dimensional"),
              factor(t, "S", "R", 3, "standard three-dimensional"),
              factor(t, "V", "R", 3, "standard tensor sign")};
    case GroupKind::Sym3:
      return {factor(t, "X", "", 1, "trivial"), factor(t, "Y", "X", 1, "sign"),
              factor(t, "Z", "X", 2, "two-dimensional")};
  }
  throw Error(ErrorKind::Internal, "unhandled group kind");
}

namespace klein_rules {

FactoredCard pair(int gT, int b_j, int b_k, int b_l) {
  const std::string what = "Klein pair kernel";
  if (b_j > 0) return card2(2LL * gT - 1 + b_j / 2, what);
  if (b_k == 0 && b_l == 0) return card2(2LL * gT - 2, what);
  if (b_k == 0 || b_l == 0) return card2(2LL * gT - 1, what);
  return card2(2LL * gT, what);
}

FactoredCard varphi(int gT, int r, int s, int t) {
  if (r == 0 && s == 0 && t == 0) return card2(4LL * gT - 4, "Klein sum kernel");
  return card2(4LL * gT - 3 + r + s + t, "Klein sum kernel");
}

FactoredCard main(int gT, int r, int s, int t) {
  int zeros = (r == 0) + (s == 0) + (t == 0);
  if (zeros == 3) return card2(8LL * gT - 6, "Klein isogeny kernel");
  if (zeros == 2) return card2(8LL * gT - 4 + r + s + t, "Klein isogeny kernel");
  return card2(8LL * gT - 3 + r + s + t, "Klein isogeny kernel");
}

FactoredCard pullback_kernel(int r, int s, int t) {
  int zeros = (r == 0) + (s == 0) + (t == 0);
  if (zeros == 3) return FactoredCard::pow2(2);
  if (zeros == 2) return FactoredCard::pow2(1);
  return FactoredCard::pow2(0);
}

}  // namespace klein_rules

KernelResult kernel_main_result(const RamificationProfile& p) {
  if (!parity_valid(p)) throw Error(ErrorKind::Parity, "profile violates parity: " + p.to_string());
  const long long g = p.base_genus();
  const std::string what = "main isogeny kernel";
  switch (p.kind()) {
    case GroupKind::Cyclic4: {
      int d = p.count("delta"), c = p.count("gamma");
      if (d > 0) return decided(what, "delta>0", card2(6 * g - 2 + d, what));
      if (c > 0) return decided(what, "delta=0, gamma>0", card2(6 * g - 3, what));
      return decided(what, "delta=gamma=0", card2(6 * g - 4, what));
    }
    case GroupKind::Klein: {
      int r = p.count("r"), s = p.count("s"), t = p.count("t");
      int zeros = (r == 0) + (s == 0) + (t == 0);
      const char* label = zeros == 3 ? "unramified" : zeros == 2 ? "exactly two of r,s,t zero" : "otherwise";
      return decided(what, label, klein_rules::main(static_cast<int>(g), r, s, t));
    }
    case GroupKind::Dihedral8: {
      long long a = p.count("alpha"), g1 = p.count("gamma1"), g2 = p.count("gamma2"), d = p.count("delta");
      if (a == 0 && g1 == 0 && g2 == 0 && d == 0) return decided(what, "row 1", card2(20 * g - 17, what));
      if (a == 0 && g2 == 0 && d == 0) return decided(what, "row 2", card2(20 * g - 15 + 4 * g1, what));
      if (a == 0 && g1 == 0 && d == 0) return decided(what, "row 3", card2(20 * g - 15, what));
      if (g1 == 0 && g2 == 0 && d == 0) return decided(what, "row 4", card2(20 * g - 14 + 3 * a, what));
      if (a == 0 && g1 == 0) return decided(what, "row 5", card2(20 * g - 13 + 4 * d, what));
      if (a == 0 && d == 0) return decided(what, "row 6", card2(20 * g - 13 + 4 * g1, what));
      if (a == 0) return decided(what, "row 7", card2(20 * g - 12 + 4 * d + 4 * g1, what));
      if (d == 0 && ((g1 > 0) != (g2 > 0))) {
        return decided(what, "row 8", card2(20 * g - 13 + 3 * a + 4 * g1 + 2 * g2, what));
      }
      KernelResult r = decided(what, "row 9", card2(20 * g - 12 + 3 * a + 4 * g1 + 2 * g2 + 5 * d, what));
      if (!(g1 > 0 && g2 > 0)) {
        r.case_label = "row 9 (extended)";
        r.warnings.push_back(
            "alpha>0 and delta>0 without gamma1*gamma2>0 is not listed in the kernel table; "
            "the last row's formula is used");
      }
      return r;
    }
    case GroupKind::Alt4: {
      long long b = p.count("beta"), c = p.count("gamma1");
      if (c == 0 && b == 0) return decided(what, "unramified", card(24 * g - 22, 2 * g - 1, what));
      if (c == 0) return decided(what, "gamma1=0, beta>0", card(24 * g - 22 + 8 * b, 2 * g, what));
      if (b == 0) return decided(what, "beta=0, gamma1>0", card(24 * g - 19 + 3 * c, 2 * g - 1, what));
      return decided(what, "beta*gamma1>0", card(24 * g - 19 + 8 * b + 3 * c, 2 * g, what));
    }
    case GroupKind::Sym4: {
      long long a = p.count("alpha"), b = p.count("beta"), c = p.count("gamma"), d = p.count("delta");
      if (a == 0 && c == 0 && d == 0) {
        return decided(what, "alpha=gamma=delta=0", card(68 * g - 65 + 22 * b, 6 * g - 3 + b, what));
      }
      if (c == 0 && d == 0) {
        return decided(what, "gamma=delta=0, alpha>0",
                       card(68 * g - 61 + 15 * a + 22 * b, 6 * g - 3 + a + b, what));
      }
      if (a == 0 && d == 0) {
        return decided(what, "alpha=delta=0, gamma>0",
                       card(68 * g - 59 + 22 * b + 12 * c, 6 * g - 3 + b, what));
      }
      return decided(what, "otherwise",
                     card(68 * g - 58 + 15 * a + 22 * b + 12 * c + 21 * d, 6 * g - 3 + a + b + d, what));
    }
    case GroupKind::Sym3: {
      long long a = p.count("alpha"), b = p.count("beta");
      if (b == 0) return decided(what, "beta=0", card(2 * g - 1, 6 * g - 3 + a, what));
      return decided(what, "beta>0", card(2 * g, 6 * g - 3 + a + b, what));
    }
  }
  throw Error(ErrorKind::Internal, "unhandled group kind");
}

FactoredCard kernel_main(const RamificationProfile& profile) {
  return *kernel_main_result(profile).value;
}

FactoredCard kernel_klein_pair(const RamificationProfile& p, KleinQuotient j) {
  require(p, GroupKind::Klein, "Klein pair kernel");
  int b_sigma = 2 * p.count("s"), b_tau = 2 * p.count("t"), b_st = 2 * p.count("r");
  int g = p.base_genus();
  switch (j) {
    case KleinQuotient::Sigma: return klein_rules::pair(g, b_sigma, b_tau, b_st);
    case KleinQuotient::Tau: return klein_rules::pair(g, b_tau, b_sigma, b_st);
    case KleinQuotient::SigmaTau: return klein_rules::pair(g, b_st, b_sigma, b_tau);
  }
  throw Error(ErrorKind::Internal, "unhandled Klein quotient");
}

FactoredCard kernel_klein_varphi(const RamificationProfile& p) {
  require(p, GroupKind::Klein, "Klein sum kernel");
  return klein_rules::varphi(p.base_genus(), p.count("r"), p.count("s"), p.count("t"));
}

FactoredCard kernel_klein_pullback(const RamificationProfile& p) {
  require(p, GroupKind::Klein, "Klein pullback kernel");
  return klein_rules::pullback_kernel(p.count("r"), p.count("s"), p.count("t"));
}

KernelResult kernel_bigonal(const RamificationProfile& p, std::optional<bool> g_isotropic) {
  require(p, GroupKind::Dihedral8, "bigonal kernel");
  const std::string what = "bigonal";
  long long g = p.base_genus();
  long long d = p.count("delta"), a = p.count("alpha"), g1 = p.count("gamma1"), g2 = p.count("gamma2");
  auto r4 = [&] { return card2(2 * g - 2 + d + g1 + g2, what); };
  auto r5 = [&] { return card2(2 * g - 1 + g2, what); };
  if (d > 0) {
    if (a == 0 && g1 == 0 && g2 == 0) return decided(what, "row 1", card2(2 * g - 5 + 2 * d, what));
    if (g1 > 0 && (g2 > 0 || a > 0)) return decided(what, "row 3", card2(2 * g - 3 + 2 * d + g1 + g2, what));
    return decided(what, "row 2", card2(2 * g - 4 + 2 * d + g1 + g2, what));
  }
  if (g1 > 0) {
    if (a == 0) return decided(what, "row 3", card2(2 * g - 3 + g1 + g2, what));
    return decided(what, "row 4", r4());
  }
  if (g2 > 0) {
    if (a == 0) return decided(what, "row 4", r4());
    return decided(what, "row 5", r5());
  }
  if (a == 0) {
    return by_flag(what, "g_isotropic", g_isotropic, "row 4", r4(), "row 5", r5(), "G isotropic",
                   "G non-isotropic");
  }
  return by_flag(what, "g_isotropic", g_isotropic, "row 5", r5(), "row 6", card2(2 * g, what),
                 "G isotropic", "G non-isotropic");
}

KernelResult kernel_trigonal_a4(const RamificationProfile& p, std::optional<bool> p2_in_perp) {
  require(p, GroupKind::Alt4, "A4 trigonal kernel");
  const std::string what = "trigonal";
  long long g = p.base_genus(), b = p.count("beta"), c = p.count("gamma1");
  if (c > 0) return decided(what, "row 2", card2(4 * g - 5 + 2 * b + c, what));
  // The flag is consumed only when gamma1 = 0; evaluate lazily so that an
  // impossible branch does not throw.
  auto first = [&] { return card2(4 * g - 6 + 2 * b, what); };
  auto second = [&] { return card2(4 * g - 5 + 2 * b, what); };
  KernelResult r;
  if (p2_in_perp.has_value()) {
    r = *p2_in_perp ? decided(what, "row 2", second()) : decided(what, "row 1", first());
    r.flags_used.push_back("p2_in_perp");
  } else {
    r.name = what;
    r.case_label = "row 1 | row 2";
    r.alternatives = {{"not contained", first()}, {"contained", second()}};
  }
  if (g == 0) {
    r.warnings.push_back(
        "g=0 with gamma1=0: the case analysis of the genus-zero situation yields the "
        "not-contained value, so a 'contained' flag conflicts with it");
  }
  return r;
}

KernelResult kernel_s4_iii(const RamificationProfile& p, std::optional<bool> p2_in_perp) {
  require(p, GroupKind::Sym4, "S4 C/Y kernel");
  const std::string what = "s4_cy";
  long long g = p.base_genus(), a = p.count("alpha"), b = p.count("beta"), c = p.count("gamma"),
            d = p.count("delta");
  auto second = [&] { return card2(8 * g - 9 + 4 * b + 2 * a + 2 * c + 3 * d, what); };
  if (c > 0 || d > 0) return decided(what, "row 2", second());
  return by_flag(what, "p2_in_perp", p2_in_perp.has_value() ? std::optional<bool>(!*p2_in_perp) : std::nullopt,
                 "row 1", card2(8 * g - 10 + 4 * b + 2 * a, what), "row 2", second(), "not contained",
                 "contained");
}

KernelResult kernel_s4_iv(const RamificationProfile& p, std::optional<bool> g_isotropic) {
  require(p, GroupKind::Sym4, "S4 Z/C kernel");
  const std::string what = "s4_zc";
  long long g = p.base_genus(), a = p.count("alpha"), b = p.count("beta"), c = p.count("gamma"),
            d = p.count("delta");
  if (d > 0 && a == 0 && c == 0) return decided(what, "row 1", card2(6 * g - 8 + 2 * b + 4 * d, what));
  if (d > 0 || c > 0) {
    if (c > 0 && a > 0 && d == 0) return decided(what, "row 3", card2(6 * g - 6 + a + 2 * b + 3 * c, what));
    return decided(what, "row 2", card2(6 * g - 7 + a + 2 * b + 3 * c + 4 * d, what));
  }
  if (a == 0) {
    return by_flag(what, "g_isotropic", g_isotropic, "row 3", card2(6 * g - 6 + 2 * b, what), "row 4",
                   card2(6 * g - 5 + 2 * b, what), "G isotropic", "G non-isotropic");
  }
  return by_flag(what, "g_isotropic", g_isotropic, "row 4", card2(6 * g - 5 + a + 2 * b, what), "row 5",
                 card2(6 * g - 4 + a + 2 * b, what), "G isotropic", "G non-isotropic");
}

KernelResult kernel_s4_v(const RamificationProfile& p, std::optional<int> zeta) {
  require(p, GroupKind::Sym4, "trigonal construction kernel");
  const std::string what = "trigonal_construction";
  if (zeta && *zeta != 0 && *zeta != 1) throw Error(ErrorKind::Schema, "zeta must be 0 or 1");
  long long g = p.base_genus(), a = p.count("alpha"), b = p.count("beta"), c = p.count("gamma"),
            d = p.count("delta");
  long long eps = a > 0 ? 0 : 1;
  if (g == 0 && c + d <= 1) {
    GenusTable t = genus_table(p);
    return decided(what, "row 1", card2(2LL * (t.genus("S") - t.genus("R")), what));
  }
  if (c + d > 1) return decided(what, "row 4", card2(4 * g - 5 + a + 2 * b + c + 2 * d - eps, what));
  if (c + d == 1) return decided(what, "row 3", card2(4 * g - 4 + a + 2 * b + d - eps, what));
  auto value = [&](long long z) { return card2(4 * g - 5 + a + 2 * b - (eps + z), what); };
  KernelResult r;
  r.name = what;
  if (zeta) {
    r.case_label = "row 2";
    r.value = value(*zeta);
    r.flags_used.push_back("zeta");
  } else {
    r.case_label = "row 2";
    r.alternatives = {{"zeta=0 (contained)", value(0)}, {"zeta=1 (not contained)", value(1)}};
  }
  return r;
}

S4Stagewise kernel_s4_stagewise(const RamificationProfile& p) {
  require(p, GroupKind::Sym4, "S4 stagewise kernel");
  GenusTable t = genus_table(p);
  const Subgroup& k = subgroup_by_name("KLEIN_NORMAL");
  RamificationProfile kp = restrict_profile(p, k, GroupKind::Klein);
  int r = kp.count("r"), s = kp.count("s"), tt = kp.count("t");

  S4Stagewise out;
  FactoredCard ju4 = torsion_card(t.genus("U"), 4);
  out.phi_u = *ju4.divide(klein_rules::pullback_kernel(r, s, tt));

  std::map<int, int> qb = quotient_branching(p, k);
  RamificationProfile s3(GroupKind::Sym3, p.base_genus(), {{"alpha", qb[3]}, {"beta", qb[2]}});
  out.phi_s3 = kernel_main(s3);

  out.nu_sum = klein_rules::varphi(kp.base_genus(), r, s, tt);
  out.pair_sum = klein_rules::pair(t.genus("R"), t.ram("C", "U"), t.ram("C", "S"), t.ram("C", "V"));
  out.product = out.phi_u * out.phi_s3 * out.nu_sum * out.pair_sum.pow(3);
  return out;
}

FactoredCard kernel_a4_stagewise(const RamificationProfile& p) {
  require(p, GroupKind::Alt4, "A4 stagewise kernel");
  RamificationProfile kp = restrict_profile(p, subgroup_by_name("KLEIN_NORMAL"), GroupKind::Klein);
  FactoredCard klein = klein_rules::main(kp.base_genus(), kp.count("r"), kp.count("s"), kp.count("t"));
  // Cyclic triple cover U -> Delta: |J Delta[3]| over the pullback kernel,
  // which has order 3 exactly when the cover is unramified.
  FactoredCard jd3 = torsion_card(p.base_genus(), 3);
  FactoredCard pull = p.count("beta") == 0 ? FactoredCard::pow3(1) : FactoredCard();
  auto cyclic = jd3.divide(pull);
  if (!cyclic) throw Error(ErrorKind::Domain, "unramified triple cover over a rational base");
  return klein * *cyclic;
}

KernelResult kernel_s4_iii_via_a4(const RamificationProfile& p, std::optional<bool> p2_in_perp) {
  require(p, GroupKind::Sym4, "S4 C/Y kernel");
  RamificationProfile ap = restrict_profile(p, subgroup_by_name("A4"), GroupKind::Alt4);
  KernelResult r = kernel_trigonal_a4(ap, p2_in_perp);
  r.warnings.clear();
  return r;
}

KernelResult kernel_s4_iv_via_d4(const RamificationProfile& p, std::optional<bool> g_isotropic) {
  require(p, GroupKind::Sym4, "S4 Z/C kernel");
  RamificationProfile dp = restrict_profile(p, subgroup_by_name("D4(2)"), GroupKind::Dihedral8);
  return kernel_bigonal(dp, g_isotropic);
}

FactoredCard torsion_card(int genus, int d) {
  if (d < 1) throw Error(ErrorKind::Domain, "torsion order must be positive");
  if (genus < 0) throw Error(ErrorKind::Domain, "genus must be nonnegative");
  return FactoredCard::from_integer(static_cast<std::uint64_t>(d)).pow(2LL * genus);
}

CompositionCheck composition_identity(int g_y, int g_z, int deg_f, int deg_g, FactoredCard ker_f,
                                      FactoredCard ker_g, FactoredCard ker_h) {
  if (deg_f < 1 || deg_g < 1) throw Error(ErrorKind::Domain, "degrees must be positive");
  if (g_y < g_z) throw Error(ErrorKind::Domain, "the covering curve has smaller genus than its image");
  CompositionCheck c;
  FactoredCard jy_f = torsion_card(g_y, deg_f);
  FactoredCard jz_g = torsion_card(g_z, deg_g);
  FactoredCard jz_h = torsion_card(g_z, deg_f * deg_g);
  FactoredCard prym_f = torsion_card(g_y - g_z, deg_f);

  auto a = jy_f.divide(ker_f);
  auto b = jz_g.divide(ker_g);
  if (a && b) c.psi_direct = *a * *b;
  if (auto x = (jz_h * prym_f).divide(ker_f * ker_g)) c.psi_via_prym = *x;

  // |ker psi| = |ker phi| * |ker gamma| with |ker gamma| = |JZ[h]| / |ker h*|.
  if (auto gamma = jz_h.divide(ker_h); gamma && c.psi_direct) {
    if (auto x = c.psi_direct->divide(*gamma)) c.phi_direct = *x;
  }
  if (auto meet = ker_h.divide(ker_g)) {
    if (auto x = (prym_f * *meet).divide(ker_f)) c.phi_via_prym = *x;
  }
  c.consistent = c.psi_direct && c.psi_via_prym && c.phi_direct && c.phi_via_prym &&
                 *c.psi_direct == *c.psi_via_prym && *c.phi_direct == *c.phi_via_prym;
  if (!c.consistent) {
    c.detail = "kernel sizes do not divide the torsion they live in, or the two forms disagree";
  }
  return c;
}

std::vector<std::string> unconsumed_flags(const RamificationProfile& p, const CaseFlags& flags) {
  std::vector<std::string> out;
  const bool s4_quiet = p.kind() == GroupKind::Sym4 && p.count("gamma") == 0 && p.count("delta") == 0;
  if (flags.g_isotropic) {
    bool used = s4_quiet || (p.kind() == GroupKind::Dihedral8 && p.count("delta") == 0 &&
                             p.count("gamma1") == 0 && p.count("gamma2") == 0);
    if (!used) out.push_back("g_isotropic");
  }
  if (flags.p2_in_perp) {
    bool used = s4_quiet || (p.kind() == GroupKind::Alt4 && p.count("gamma1") == 0);
    if (!used) out.push_back("p2_in_perp");
  }
  if (flags.zeta) {
    bool used = s4_quiet && p.base_genus() > 0;
    if (!used) out.push_back("zeta");
  }
  return out;
}

DecompositionReport decompose(const RamificationProfile& p, const CaseFlags& flags) {
  if (auto extra = unconsumed_flags(p, flags); !extra.empty()) {
    std::string list;
    for (const auto& f : extra) list += (list.empty() ? "" : ", ") + f;
    throw Error(ErrorKind::Schema, "flag not consulted for this profile: " + list);
  }
  GenusTable t = genus_table(p);
  DecompositionReport rep;
  rep.factors = factors(p, t);
  for (const IsogenyFactor& f : rep.factors) rep.dimension_total += f.multiplicity * f.dim;
  if (rep.dimension_total != t.top_genus) {
    throw Error(ErrorKind::Internal, "dimension identity fails for " + p.to_string());
  }
  auto guarded = [](const std::string& name, const auto& compute) {
    try {
      return compute();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
      KernelResult r;
      r.name = name;
      r.error = e.what();
      return r;
    }
  };
  auto value = [](std::string name, auto compute) {
    return [name, compute] { return decided(name, "", compute()); };
  };
  rep.main = guarded("main isogeny kernel", [&] { return kernel_main_result(p); });
  auto add = [&](const std::string& name, const auto& compute) {
    rep.secondary.push_back(guarded(name, compute));
  };
  switch (p.kind()) {
    case GroupKind::Klein:
      add("klein_pair_sigma", value("klein_pair_sigma", [&] { return kernel_klein_pair(p, KleinQuotient::Sigma); }));
      add("klein_pair_tau", value("klein_pair_tau", [&] { return kernel_klein_pair(p, KleinQuotient::Tau); }));
      add("klein_pair_sigmatau",
          value("klein_pair_sigmatau", [&] { return kernel_klein_pair(p, KleinQuotient::SigmaTau); }));
      add("klein_sum", value("klein_sum", [&] { return kernel_klein_varphi(p); }));
      add("klein_pullback", value("klein_pullback", [&] { return kernel_klein_pullback(p); }));
      break;
    case GroupKind::Dihedral8:
      add("bigonal", [&] { return kernel_bigonal(p, flags.g_isotropic); });
      break;
    case GroupKind::Alt4:
      add("trigonal", [&] { return kernel_trigonal_a4(p, flags.p2_in_perp); });
      break;
    case GroupKind::Sym4:
      add("s4_cy", [&] { return kernel_s4_iii(p, flags.p2_in_perp); });
      add("s4_zc", [&] { return kernel_s4_iv(p, flags.g_isotropic); });
      add("trigonal_construction", [&] { return kernel_s4_v(p, flags.zeta); });
      break;
    case GroupKind::Cyclic4:
    case GroupKind::Sym3:
      break;
  }
  return rep;
}

}  // namespace fourfold
