// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fourfold/decomposition.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/report.hpp"
#include "fourfold/symplectic.hpp"
#include "oracles.hpp"

using namespace fourfold;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string why) {
    ok = false;
    if (notes.size() < 8) notes.push_back(std::move(why));
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

void tables(Verdict& v, std::initializer_list<const char*> ids) {
  for (const char* id : ids) {
    TableReport t = reproduce_table(id);
    if (t.cells_checked == 0) v.fail(std::string(id) + ": no cells checked");
    for (const auto& m : t.mismatches) v.fail(std::string(id) + ": " + m);
    if (t.ok()) v.note(std::string(id) + " " + std::to_string(t.cells_checked) + " cells");
  }
}

int total_dim(const RamificationProfile& p) {
  int total = 0;
  for (const auto& f : factors(p)) total += f.dim * f.multiplicity;
  return total;
}

Verdict genus_tables() {
  Verdict v;
  tables(v, {"genus-cyclic", "genus-klein", "genus-d4", "genus-a4", "genus-s4"});
  // Independent coset count for every curve of the same kind of sample.
  int curves = 0;
  for (GroupKind k : all_kinds()) {
    if (k == GroupKind::Sym3) continue;
    for (const auto& p : random_valid_profiles(k, 200, 9000 + static_cast<int>(k))) {
      GenusTable t = genus_table(p);
      for (const auto& c : p.model().curves) {
        ++curves;
        auto h = oracle::as_set(subgroup_by_name(c.subgroup).elements);
        if (2LL * t.genus(c.name) != oracle::twice_genus(p, h)) v.fail(p.to_string() + " curve " + c.name);
      }
    }
  }
  v.note(std::to_string(curves) + " curve genera against coset counting");
  return v;
}

Verdict dimension_identity() {
  Verdict v;
  int n = 0;
  for (GroupKind k : all_kinds()) {
    auto top = oracle::as_set(subgroup_by_name("TRIVIAL").elements);
    for (const auto& p : random_valid_profiles(k, 200, 9100 + static_cast<int>(k))) {
      ++n;
      long long twice = oracle::twice_genus(p, top);
      if (2LL * total_dim(p) != twice || genus_top(p) * 2LL != twice) v.fail(p.to_string());
    }
  }
  v.note(std::to_string(n) + " profiles");
  return v;
}

Verdict stagewise() {
  Verdict v;
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 200, 9200)) {
    S4Stagewise s = kernel_s4_stagewise(p);
    if (!(s.product == kernel_main(p))) {
      v.fail(p.to_string() + ": closed " + kernel_main(p).to_string() + " stagewise " + s.product.to_string());
    }
  }
  v.note("200 profiles");
  return v;
}

Verdict families() {
  Verdict v;
  tables(v, {"families-genera", "families-degrees", "families-realizability"});
  return v;
}

Verdict one_parameter() {
  Verdict v;
  tables(v, {"one-param", "one-param-realizability"});
  return v;
}

Verdict rigid() {
  Verdict v;
  tables(v, {"rigid"});
  RamificationProfile five(GroupKind::Sym4, 0, {{"alpha", 1}, {"beta", 1}, {"delta", 1}});
  SearchOutcome o = search(five);
  if (genus_top(five) != 0) v.fail("case V top genus");
  if (o.status != SearchOutcome::Status::Witness || generated_group(*o.witness).count() != 24) {
    v.fail("case V has no degree-24 witness");
  }
  RamificationProfile seven(GroupKind::Sym4, 0, {{"beta", 1}, {"delta", 2}});
  if (genus_top(seven) != 3 || !(kernel_main(seven) == FactoredCard(6, 0))) v.fail("case VII");
  return v;
}

Verdict genus_seven() {
  Verdict v;
  tables(v, {"genus7"});
  GenusTable t = genus_table(RamificationProfile(GroupKind::Sym4, 0, {{"alpha", 2}, {"delta", 2}}));
  const std::pair<const char*, int> want[] = {{"W", 7}, {"C", 3}, {"Z", 3}, {"Y", 3}, {"U", 1}, {"S", 1},
                                             {"V", 1}, {"X", 1}, {"Delta", 1}, {"R", 0}};
  for (const auto& [c, g] : want)
    if (t.genus(c) != g) v.fail(std::string("genus of ") + c);
  return v;
}

Verdict symplectic() {
  Verdict v;
  std::size_t n = 0;
  for (auto [g, d] : {std::pair{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
    SympModule m(g, d);
    oracle::Vecs scan{g, d};
    for (const auto& s : all_submodules(m)) {
      ++n;
      SubModule perp = orthogonal(s);
      auto brute = scan.orthogonal(s.elements());
      if (perp.elements() != std::vector<Vec>(brute.begin(), brute.end())) v.fail("orthogonal differs from scan");
      if (s.size() * perp.size() != m.size()) v.fail("cardinality law");
      if (!(orthogonal(perp) == s)) v.fail("double orthogonal");
    }
  }
  v.note(std::to_string(n) + " submodules");
  for (int g = 2; g <= 3; ++g) {
    if (klein_torsion_model(KleinTorsionCase::Ia, g).log2("a_sigma P cap a_tau P") != 2 * g - 4) v.fail("case Ia");
    if (klein_torsion_model(KleinTorsionCase::Ib, g).log2("a_sigma P cap a_tau P") != 2 * g - 2) v.fail("case Ib");
  }
  return v;
}

Verdict torsion() {
  Verdict v;
  for (int g = 0; g <= 5; ++g)
    for (int omega = 0; omega <= 10; omega += 2) {
      if (g == 0 && omega == 0) continue;  // no unramified double cover of the line
      if (p2_structure_count(g, omega).total_dim != 2 * g - 2 + omega) v.fail("P[2] at g=" + std::to_string(g));
    }
  for (int g = 0; g <= 3; ++g)
    for (int a = 0; a <= 5; ++a) {
      int e3 = 2 * g + (a >= 2 ? a - 1 : 0);
      if (!(degree3_L_count(g, a) == FactoredCard(0, e3))) v.fail("L at g=" + std::to_string(g));
    }
  return v;
}

Verdict conditional_pairs() {
  Verdict v;
  int pairs = 0;
  for (GroupKind k : {GroupKind::Sym4, GroupKind::Dihedral8, GroupKind::Alt4}) {
    for (const auto& p : random_valid_profiles(k, 200, 9300 + static_cast<int>(k), 5, 2)) {
      DecompositionReport open = decompose(p);
      for (const auto& kr : open.secondary) {
        if (!kr.error.empty() || !kr.conditional()) continue;
        ++pairs;
        if (kr.alternatives.size() != 2 || kr.alternatives[0].condition.empty() ||
            kr.alternatives[0].condition == kr.alternatives[1].condition) {
          v.fail(p.to_string() + " " + kr.name + ": malformed pair");
        }
      }
      for (bool choice : {false, true}) {
        CaseFlags flags;
        flags.g_isotropic = choice;
        flags.p2_in_perp = choice;
        flags.zeta = choice ? 1 : 0;
        for (const auto& name : unconsumed_flags(p, flags)) {
          if (name == "g_isotropic") flags.g_isotropic.reset();
          if (name == "p2_in_perp") flags.p2_in_perp.reset();
          if (name == "zeta") flags.zeta.reset();
        }
        DecompositionReport fixed = decompose(p, flags);
        for (std::size_t i = 0; i < fixed.secondary.size(); ++i) {
          const KernelResult& a = open.secondary[i];
          const KernelResult& b = fixed.secondary[i];
          if (!a.conditional()) continue;
          bool listed = b.value && (*b.value == a.alternatives[0].value || *b.value == a.alternatives[1].value);
          if (!listed) v.fail(p.to_string() + " " + a.name + ": decided value is not an alternative");
        }
      }
    }
  }
  v.note(std::to_string(pairs) + " conditional pairs");
  if (pairs == 0) v.fail("no conditional kernels sampled");
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"genus tables", genus_tables},
      {"dimension identity", dimension_identity},
      {"S4 kernel closed form vs stagewise product", stagewise},
      {"families theorem", families},
      {"one-parameter families", one_parameter},
      {"rigid cases", rigid},
      {"genus-seven example", genus_seven},
      {"symplectic oracle", symplectic},
      {"torsion bookkeeping", torsion},
      {"conditional-pair contract", conditional_pairs},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const Error& e) {
      v.fail(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.ok) ++failed;
    std::printf("criterion %2d: %s  %s (%.2f s)\n", index, v.ok ? "PASS" : "FAIL", name, secs);
    for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of 10 criteria pass\n", 10 - failed);
  return failed;
}
