#include <doctest.h>

#include "fourfold/decomposition.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/report.hpp"
#include "fourfold/symplectic.hpp"
#include "oracles.hpp"

using namespace fourfold;

namespace {

RamificationProfile s4(int g, int a, int b, int c, int d) {
  return RamificationProfile(GroupKind::Sym4, g, {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}});
}
RamificationProfile klein(int g, int r, int s, int t) {
  return RamificationProfile(GroupKind::Klein, g, {{"r", r}, {"s", s}, {"t", t}});
}
RamificationProfile d4(int g, int a, int g1, int g2, int d) {
  return RamificationProfile(GroupKind::Dihedral8, g, {{"alpha", a}, {"gamma1", g1}, {"gamma2", g2}, {"delta", d}});
}
RamificationProfile a4(int g, int b, int g1) {
  return RamificationProfile(GroupKind::Alt4, g, {{"beta", b}, {"gamma1", g1}});
}

FactoredCard c(std::int64_t e2, std::int64_t e3 = 0) { return FactoredCard(e2, e3); }

}  // namespace

TEST_CASE("factored cardinalities") {
  CHECK(c(25, 4).to_string() == "2^25*3^4");
  CHECK(c(0, 0).to_string() == "1");
  CHECK(c(3).to_string() == "2^3");
  CHECK(c(3, 1).decimal() == "24");
  CHECK(FactoredCard::from_integer(216) == c(3, 3));
  CHECK_THROWS_AS(FactoredCard::from_integer(10), Error);
  CHECK_THROWS_AS(FactoredCard(-1, 0), Error);
  CHECK(c(3, 1).divide(c(4)) == std::nullopt);
  CHECK(c(5, 2).divide(c(2, 1)) == c(3, 1));
  CHECK((c(1'000'000, 7) * c(1'000'000, 1)) == c(2'000'000, 8));
  CHECK(c(1'000'000).pow(3) == c(3'000'000));
  CHECK(c(70).to_u64() == std::nullopt);
  CHECK(c(10, 1).to_u64() == 3072u);
}

TEST_CASE("torsion cardinality") {
  CHECK(torsion_card(3, 2) == FactoredCard::from_integer(64));
  CHECK(torsion_card(0, 6) == c(0));
  CHECK(torsion_card(2, 6) == c(4, 4));
  CHECK_THROWS_AS(torsion_card(1, 5), Error);
  for (int g = 1; g <= 5; ++g)
    for (int omega = 0; omega <= 10; omega += 2) {
      // |P[2]| for a double cover of a genus-g curve with omega branch points.
      CHECK(torsion_card(g - 1 + omega / 2, 2) == c(2 * g - 2 + omega));
    }
}

TEST_CASE("factor lists") {
  auto f = factors(s4(0, 4, 0, 3, 0));
  REQUIRE(f.size() == 5);
  const int dims[] = {0, 1, 0, 2, 4}, mult[] = {1, 1, 2, 3, 3};
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    CHECK(f[i].dim == dims[i]);
    CHECK(f[i].multiplicity == mult[i]);
    total += f[i].dim * f[i].multiplicity;
  }
  CHECK(total == 19);
  CHECK(f[0].label == "JT");
  CHECK(f[3].label == "P(S/R)");

  auto fa = factors(a4(1, 2, 0));
  REQUIRE(fa.size() == 3);
  CHECK(fa[0].label == "JDelta");
  CHECK(fa[1].label == "P(U/Delta)");
  CHECK(fa[2].label == "P(C/U)");
  CHECK(fa[2].multiplicity == 3);

  auto fk = factors(klein(1, 0, 0, 0));
  int sum = 0;
  for (const auto& x : fk) sum += x.dim * x.multiplicity;
  CHECK(fk[0].dim == 1);
  CHECK(sum == 1);
}

TEST_CASE("dimension identity against coset-counted top genus") {
  for (GroupKind k : all_kinds()) {
    for (const auto& p : random_valid_profiles(k, 100, 500 + static_cast<int>(k))) {
      int total = 0;
      for (const auto& f : factors(p)) total += f.dim * f.multiplicity;
      auto top = oracle::as_set(subgroup_by_name("TRIVIAL").elements);
      INFO(p.to_string());
      CHECK(2 * total == oracle::twice_genus(p, top));
    }
  }
}

TEST_CASE("main kernels") {
  CHECK(kernel_main(klein(1, 0, 0, 0)) == c(2));
  CHECK(kernel_main(s4(1, 0, 0, 0, 0)) == c(3, 3));
  CHECK(kernel_main(a4(1, 2, 0)) == c(18, 2));
  CHECK(kernel_main(RamificationProfile(GroupKind::Cyclic4, 1, {{"delta", 2}})) == c(6));
  CHECK(kernel_main(d4(1, 0, 0, 0, 0)) == c(3));
  CHECK(kernel_main(RamificationProfile(GroupKind::Sym3, 1, {{"alpha", 1}})) == c(1, 4));
  CHECK_THROWS_AS(kernel_main(s4(0, 1, 0, 0, 0)), Error);
}

TEST_CASE("Klein pair and sum kernels") {
  for (auto j : {KleinQuotient::Sigma, KleinQuotient::Tau, KleinQuotient::SigmaTau}) {
    CHECK(kernel_klein_pair(klein(1, 0, 0, 0), j) == c(0));
  }
  CHECK(kernel_klein_pair(klein(0, 0, 2, 0), KleinQuotient::Sigma) == c(1));
  CHECK(kernel_klein_pair(klein(0, 2, 0, 2), KleinQuotient::Tau) == c(1));
  CHECK(kernel_klein_varphi(klein(2, 0, 0, 0)) == c(4));
  CHECK(kernel_klein_varphi(klein(0, 2, 2, 2)) == c(3));
  CHECK(kernel_klein_varphi(klein(1, 2, 0, 0)) == c(3));
  CHECK_THROWS_AS(kernel_klein_pair(s4(0, 2, 1, 1, 0), KleinQuotient::Sigma), Error);
}

TEST_CASE("bigonal kernel") {
  CHECK(kernel_bigonal(d4(1, 0, 0, 0, 2), std::nullopt).value == c(1));
  CHECK(kernel_bigonal(d4(2, 2, 0, 0, 0), false).value == c(4));
  auto pair = kernel_bigonal(d4(1, 0, 0, 0, 0), std::nullopt);
  REQUIRE(pair.conditional());
  REQUIRE(pair.alternatives.size() == 2);
  CHECK(pair.alternatives[0].value == c(0));
  CHECK(pair.alternatives[1].value == c(1));
  CHECK(pair.alternatives[0].condition != pair.alternatives[1].condition);
}

TEST_CASE("trigonal kernel of the alternating case") {
  auto g0 = kernel_trigonal_a4(a4(0, 3, 0), false);
  CHECK(g0.value == c(0));
  CHECK_FALSE(g0.warnings.empty());
  CHECK(kernel_trigonal_a4(a4(1, 0, 2), std::nullopt).value == c(1));
  CHECK(kernel_trigonal_a4(a4(2, 0, 0), true).value == c(3));
}

TEST_CASE("S4 kernels of the C-Y, Z-C and trigonal constructions") {
  CHECK(kernel_s4_iii(s4(1, 2, 0, 0, 0), false).value == c(2));
  CHECK(kernel_s4_iii(s4(0, 2, 1, 1, 0), std::nullopt).value == c(1));
  CHECK(kernel_s4_iii(s4(1, 0, 1, 0, 0), true).value == c(3));

  CHECK(kernel_s4_iv(s4(1, 0, 0, 2, 0), std::nullopt).value == c(5));
  CHECK(kernel_s4_iv(s4(1, 2, 0, 0, 0), true).value == c(3));
  CHECK(kernel_s4_iv(s4(2, 2, 1, 0, 0), false).value == c(12));

  auto p = s4(0, 2, 1, 1, 0);
  auto v = kernel_s4_v(p, std::nullopt);
  REQUIRE(v.value);
  CHECK(*v.value == c(2 * (genus_of(p, "S") - genus_of(p, "R"))));
  CHECK(kernel_s4_v(s4(1, 2, 1, 0, 0), 0).value == c(3));
  CHECK(kernel_s4_v(s4(1, 1, 0, 1, 1), std::nullopt).value == c(3));
  CHECK_THROWS_AS(kernel_s4_v(s4(1, 2, 1, 0, 0), 2), Error);
}

TEST_CASE("stagewise products agree with the closed forms") {
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 200, 601)) {
    auto st = kernel_s4_stagewise(p);
    INFO(p.to_string());
    CHECK(st.product == st.phi_u * st.phi_s3 * st.nu_sum * st.pair_sum.pow(3));
    CHECK(st.product == kernel_main(p));
  }
  for (const auto& p : random_valid_profiles(GroupKind::Alt4, 200, 602)) {
    INFO(p.to_string());
    CHECK(kernel_a4_stagewise(p) == kernel_main(p));
  }
}

TEST_CASE("S4 secondary kernels agree with their sub-cover paths") {
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 200, 603)) {
    for (std::optional<bool> f : {std::optional<bool>{}, std::optional<bool>{true}, std::optional<bool>{false}}) {
      auto a = kernel_s4_iii(p, f), b = kernel_s4_iii_via_a4(p, f);
      INFO(p.to_string());
      CHECK(a.value == b.value);
      CHECK(a.alternatives.size() == b.alternatives.size());
      auto x = kernel_s4_iv(p, f), y = kernel_s4_iv_via_d4(p, f);
      CHECK(x.value == y.value);
      CHECK(x.alternatives.size() == y.alternatives.size());
    }
  }
}

TEST_CASE("conditional pairs carry both labelled values") {
  auto rep = decompose(s4(1, 2, 1, 0, 0));
  int conditional = 0;
  for (const auto& k : rep.secondary) {
    if (!k.conditional()) continue;
    ++conditional;
    REQUIRE(k.alternatives.size() == 2);
    CHECK_FALSE(k.alternatives[0].condition.empty());
    CHECK(k.alternatives[0].condition != k.alternatives[1].condition);
    CHECK(k.flags_used.empty());
  }
  CHECK(conditional == 3);

  CaseFlags flags;
  flags.g_isotropic = true;
  flags.p2_in_perp = false;
  flags.zeta = 1;
  auto decided = decompose(s4(1, 2, 1, 0, 0), flags);
  for (const auto& k : decided.secondary) {
    CHECK_FALSE(k.conditional());
    CHECK(k.flags_used.size() == 1);
  }
}

TEST_CASE("flags the profile does not consume are rejected") {
  CaseFlags flags;
  flags.g_isotropic = true;
  CHECK_THROWS_AS(decompose(s4(0, 2, 1, 1, 0), flags), Error);
  CHECK_THROWS_AS(decompose(klein(1, 0, 0, 0), flags), Error);
  CHECK(unconsumed_flags(s4(0, 2, 1, 1, 0), flags) == std::vector<std::string>{"g_isotropic"});
  CHECK(unconsumed_flags(s4(1, 2, 1, 0, 0), flags).empty());
}

TEST_CASE("tabulated degrees through the full report") {
  for (int gm = 1; gm <= 4; ++gm) CHECK(decompose(s4(0, 4, 0, gm, 0)).main.value == c(12 * gm + 2, 1));
  auto vii = decompose(s4(0, 0, 1, 0, 2));
  CHECK(vii.dimension_total == 3);
  CHECK(vii.main.value == c(6));
  CHECK(decompose(s4(1, 0, 1, 0, 0)).main.value == c(25, 4));
}

TEST_CASE("composition identity") {
  auto a = composition_identity(3, 1, 2, 2, c(0), c(0), c(0));
  CHECK(a.consistent);
  CHECK(a.psi_direct == c(8));
  CHECK(a.psi_via_prym == c(8));
  auto b = composition_identity(2, 0, 2, 2, c(1), c(0), c(0));
  CHECK(b.consistent);
  CHECK(b.psi_direct == c(3));
  auto t = composition_identity(0, 0, 2, 2, c(0), c(0), c(0));
  CHECK(t.psi_direct == c(0));
  CHECK_FALSE(composition_identity(2, 0, 2, 2, c(1), c(1), c(0)).consistent);
}

TEST_CASE("Klein towers satisfy the composition identity") {
  for (const auto& p : random_valid_profiles(GroupKind::Klein, 200, 604)) {
    GenusTable t = genus_table(p);
    auto ker_double = [](int ram) { return c(ram == 0 ? 1 : 0); };
    for (const char* mid : {"X_sigma", "X_tau", "X_sigmatau"}) {
      auto r = composition_identity(t.genus("X"), t.genus(mid), 2, 2, ker_double(t.ram("X", mid)),
                                    ker_double(t.ram(mid, "T")), kernel_klein_pullback(p));
      INFO(p.to_string() << " via " << mid << ": " << r.detail);
      CHECK(r.consistent);
    }
  }
}

TEST_CASE("Klein pair rule matches the 2-torsion case models") {
  const char* names[] = {"sigma", "tau", "sigmatau"};
  for (int gT = 1; gT <= 3; ++gT) {
    for (auto which : {KleinTorsionCase::Ia, KleinTorsionCase::Ib, KleinTorsionCase::II, KleinTorsionCase::III, KleinTorsionCase::IVa,
                       KleinTorsionCase::IVb}) {
      for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s)
          for (int t = 0; t <= 4; ++t) {
            std::optional<KleinTorsionModel> m;
            try {
              m = klein_torsion_model(which, gT, r, s, t);
            } catch (const Error& e) {
              REQUIRE(e.kind() == ErrorKind::Domain);
              continue;
            }
            const int b[3] = {2 * s, 2 * t, 2 * r};
            for (int j = 0; j < 3; ++j) {
              INFO(case_name(which) << " g_T=" << gT << " r=" << r << " s=" << s << " t=" << t << " j=" << names[j]);
              CHECK(m->log2(std::string("ker phi_") + names[j]) ==
                    klein_rules::pair(gT, b[j], b[(j + 1) % 3], b[(j + 2) % 3]).exp2());
            }
          }
    }
  }
}

TEST_CASE("dihedral patterns missing from the kernel table use the last row with a warning") {
  auto p = d4(0, 2, 0, 0, 2);
  REQUIRE(parity_valid(p));
  auto k = kernel_main_result(p);
  CHECK(k.case_label == "row 9 (extended)");
  CHECK(k.value == c(20 * 0 - 12 + 3 * 2 + 5 * 2));
  CHECK_FALSE(k.warnings.empty());
  CHECK(kernel_main_result(d4(0, 2, 2, 2, 2)).warnings.empty());
}
