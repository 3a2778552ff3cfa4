#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "fourfold/errors.hpp"
#include "fourfold/genus.hpp"
#include "fourfold/report.hpp"
#include "fourfold/symplectic.hpp"

namespace fourfold {

SuiteScope parse_scope(std::string_view name) {
  if (name == "fast") return SuiteScope::Fast;
  if (name == "exhaustive") return SuiteScope::Exhaustive;
  throw Error(ErrorKind::Schema, "scope must be fast or exhaustive, got " + std::string(name));
}

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok && !c.informational) return false;
  return true;
}

Json SuiteReport::to_json() const {
  Json cs = Json::array();
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.ok && !c.informational) ++failed;
    cs.push_back({{"name", c.name},
                  {"status", c.informational ? "INFO" : (c.ok ? "PASS" : "FAIL")},
                  {"detail", c.detail},
                  {"seconds", c.seconds}});
  }
  return {{"scope", scope}, {"status", ok() ? "pass" : "fail"}, {"failed", failed}, {"checks", cs}};
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Counts cases and keeps the first few failures for the summary line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) {
      if (failures_ < 5) examples_ += (examples_.empty() ? "" : "; ") + what;
      ++failures_;
    }
  }
  Outcome outcome() const {
    if (failures_ == 0) return {true, std::to_string(cases_) + " cases"};
    return {false, std::to_string(failures_) + " of " + std::to_string(cases_) + " failed: " + examples_};
  }

 private:
  int cases_ = 0;
  int failures_ = 0;
  std::string examples_;
};

bool same_values(const KernelResult& a, const KernelResult& b) {
  if (!a.error.empty() || !b.error.empty()) return !a.error.empty() && !b.error.empty();
  if (a.value || b.value) return a.value == b.value;
  if (a.alternatives.size() != b.alternatives.size()) return false;
  for (std::size_t i = 0; i < a.alternatives.size(); ++i)
    if (!(a.alternatives[i].value == b.alternatives[i].value)) return false;
  return true;
}

RamificationProfile s4(int g, int alpha, int beta, int gamma, int delta) {
  return RamificationProfile(GroupKind::Sym4, g, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}});
}

std::vector<RamificationProfile> table_profiles(bool realizable) {
  std::vector<RamificationProfile> out;
  const Json f = golden("families");
  if (realizable) {
    for (const auto& r : f.at("rows")) out.push_back(s4(0, r.at("alpha"), r.at("beta"), r.at("gamma_min"), r.at("delta")));
    const Json one_param_doc = golden("one_param");
    for (const auto& r : one_param_doc.at("rows"))
      out.push_back(s4(r.at("g"), r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta")));
  } else {
    for (const auto& r : f.at("unrealizable")) out.push_back(s4(0, r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta")));
  }
  const Json rigid_doc = golden("rigid");
  for (const auto& r : rigid_doc.at("rows")) {
    if (r.at("realizable").get<bool>() == realizable) out.push_back(s4(0, r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta")));
  }
  return out;
}

Outcome dimension_identity() {
  Tally t;
  for (GroupKind k : all_kinds()) {
    for (const auto& p : random_valid_profiles(k, 200, 200 + static_cast<int>(k))) {
      auto rep = decompose(p);
      t.check(rep.dimension_total == genus_top(p), p.to_string());
    }
  }
  return t.outcome();
}

Outcome s4_stagewise() {
  Tally t;
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 200, 301))
    t.check(kernel_s4_stagewise(p).product == kernel_main(p), p.to_string());
  return t.outcome();
}

Outcome a4_stagewise() {
  Tally t;
  for (const auto& p : random_valid_profiles(GroupKind::Alt4, 200, 302))
    t.check(kernel_a4_stagewise(p) == kernel_main(p), p.to_string());
  return t.outcome();
}

Outcome s4_secondary_paths() {
  Tally t;
  const std::optional<bool> flags[] = {std::nullopt, true, false};
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 200, 303)) {
    for (auto f : flags) {
      t.check(same_values(kernel_s4_iii(p, f), kernel_s4_iii_via_a4(p, f)), "cy " + p.to_string());
      t.check(same_values(kernel_s4_iv(p, f), kernel_s4_iv_via_d4(p, f)), "zc " + p.to_string());
    }
  }
  return t.outcome();
}

Outcome klein_torsion_cases() {
  Tally t;
  for (int gT = 2; gT <= 4; ++gT) {
    for (KleinTorsionCase c : {KleinTorsionCase::Ia, KleinTorsionCase::Ib}) {
      auto m = klein_torsion_model(c, gT);
      t.check(m.log2("ker phi_sigma") == klein_rules::pair(gT, 0, 0, 0).exp2(),
              std::string(case_name(c)) + " g_T=" + std::to_string(gT));
    }
  }
  for (int gT = 0; gT <= 3; ++gT) {
    for (KleinTorsionCase c : {KleinTorsionCase::II, KleinTorsionCase::III, KleinTorsionCase::IVb}) {
      for (int r = 0; r <= 4; r += 2)
        for (int s = 0; s <= 4; s += 2)
          for (int u = 0; u <= 4; u += 2) {
            std::optional<KleinTorsionModel> m;
            try {
              m = klein_torsion_model(c, gT, r, s, u);
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::Domain) throw;
              continue;
            }
            int image = 2 * gT - static_cast<int>(klein_rules::pullback_kernel(r, s, u).exp2());
            t.check(m->log2("|gamma*(JT[2])|") == image, std::string(case_name(c)) + " g_T=" + std::to_string(gT));
          }
    }
  }
  return t.outcome();
}

// X -> X_sigma -> T inside a Klein cover: a double cover of a double cover.
Outcome klein_towers() {
  Tally t;
  for (const auto& p : random_valid_profiles(GroupKind::Klein, 200, 304)) {
    GenusTable g = genus_table(p);
    auto ker_double = [](int ram) { return FactoredCard::pow2(ram == 0 ? 1 : 0); };
    auto c = composition_identity(g.genus("X"), g.genus("X_sigma"), 2, 2, ker_double(g.ram("X", "X_sigma")),
                                  ker_double(g.ram("X_sigma", "T")), kernel_klein_pullback(p));
    t.check(c.consistent, p.to_string() + " " + c.detail);
  }
  return t.outcome();
}

Outcome symplectic_laws(const std::vector<std::pair<int, int>>& dims) {
  Tally t;
  for (auto [d, g] : dims) {
    SympModule m(g, d);
    for (const auto& s : all_submodules(m)) {
      auto perp = orthogonal(s);
      bool law = s.size() * perp.size() == m.size();
      t.check(law && orthogonal(perp) == s && (is_isotropic(s) == perp.contains(s)),
              "d=" + std::to_string(d) + " g=" + std::to_string(g));
    }
  }
  return t.outcome();
}

Outcome maximal_isotropic_sizes(int max_g) {
  Tally t;
  for (int g = 1; g <= max_g; ++g) {
    SympModule m(g, 2);
    for (const auto& s : maximal_isotropic(m)) t.check(s.size() == (1u << g), "g=" + std::to_string(g));
  }
  return t.outcome();
}

Outcome klein_eta_independence(int max_g) {
  Tally t;
  for (int gT = 1; gT <= max_g; ++gT) {
    SympModule m(gT, 2);
    std::map<int, std::vector<int>> seen;  // pairing -> log2 values
    for (Vec a = 1; a < m.size(); ++a) {
      for (Vec b = 1; b < m.size(); ++b) {
        if (a == b) continue;
        auto model = klein_torsion_case_one(m, a, b);
        std::vector<int> v;
        for (const auto& q : model.quantities) v.push_back(q.log2);
        auto [it, fresh] = seen.emplace(m.form(a, b), v);
        t.check(fresh || it->second == v, "g_T=" + std::to_string(gT));
      }
    }
  }
  return t.outcome();
}

Outcome torsion_counts() {
  Tally t;
  for (int g = 0; g <= 5; ++g) {
    for (int omega = 0; omega <= 10; omega += 2) {
      if (g == 0 && omega == 0) continue;
      auto s = p2_structure_count(g, omega);
      t.check(s.total_dim == s.expected_dim && s.total_dim == 2 * g - 2 + omega,
              "g=" + std::to_string(g) + " omega=" + std::to_string(omega));
    }
  }
  for (int g = 0; g <= 3; ++g) {
    for (int alpha = 0; alpha <= 5; ++alpha) {
      auto l = degree3_L_count(g, alpha);
      auto jx3 = torsion_card(g, 3);
      t.check(alpha <= 1 ? l == jx3 : l == jx3 * FactoredCard::pow3(alpha - 1),
              "g=" + std::to_string(g) + " alpha=" + std::to_string(alpha));
    }
  }
  return t.outcome();
}

Outcome witness_round_trip() {
  Tally t;
  for (const auto& p : table_profiles(true)) {
    auto o = search(p);
    if (!o.witness) {
      t.check(false, p.to_string() + " no witness");
      continue;
    }
    auto back = witness_from_json(witness_json(*o.witness, p.kind()));
    t.check(back.handles == o.witness->handles && back.branch == o.witness->branch && verify_tuple(back, p).ok,
            p.to_string());
  }
  return t.outcome();
}

Outcome empty_profiles() {
  Tally t;
  for (GroupKind k : all_kinds()) {
    RamificationProfile p(k, 2);
    auto rep = decompose(p);
    t.check(validate(p).empty() && rep.dimension_total == genus_top(p) && !rep.main.error.size(),
            std::string(kind_name(k)));
  }
  return t.outcome();
}

Outcome golden_parses() {
  Tally t;
  for (const auto& n : golden_names()) t.check(!golden(n).empty(), n);
  return t.outcome();
}

Outcome exhausted_proofs() {
  Tally t;
  for (const auto& p : table_profiles(false)) {
    t.check(search(p).status == SearchOutcome::Status::ExhaustedNone, p.to_string());
  }
  return t.outcome();
}

// Every small profile with no violations, searched with a bounded budget.
Outcome small_profile_realizability() {
  std::map<std::string, int> by_status;
  std::string unrealized;
  int listed = 0;
  for (GroupKind k : all_kinds()) {
    const GroupModel& m = group_model(k);
    const std::size_t n = m.symbols.size();
    for (int g = 0; g <= 1; ++g) {
      std::vector<int> c(n, 0);
      while (true) {
        std::map<std::string, int> counts;
        for (std::size_t i = 0; i < n; ++i) counts[m.symbols[i].name] = c[i];
        RamificationProfile p(k, g, counts);
        if (validate(p).empty() && branch_count(p) <= 6) {
          auto o = search(p, {SearchMode::GaloisImage, 1'000'000, 1});
          ++by_status[std::string(status_name(o.status))];
          if (o.status != SearchOutcome::Status::Witness && listed++ < 20) {
            unrealized += (unrealized.empty() ? "" : ", ") + p.to_string() + " " + std::string(status_name(o.status));
          }
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
          if (++c[i] <= 12) break;
          c[i] = 0;
        }
        if (i == n) break;
      }
    }
  }
  std::ostringstream os;
  for (const auto& [s, count] : by_status) os << s << "=" << count << " ";
  if (!unrealized.empty()) os << "without witness: " << unrealized;
  return {true, os.str()};
}

}  // namespace

SuiteReport verify_suite(SuiteScope scope) {
  SuiteReport rep;
  rep.scope = scope == SuiteScope::Fast ? "fast" : "exhaustive";
  auto run = [&](std::string name, const std::function<Outcome()>& fn, bool informational = false) {
    auto start = std::chrono::steady_clock::now();
    SuiteCheck c;
    c.name = std::move(name);
    c.informational = informational;
    try {
      Outcome o = fn();
      c.ok = o.ok;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.checks.push_back(std::move(c));
  };
  const bool full = scope == SuiteScope::Exhaustive;
  run("golden tables parse", golden_parses);
  run("empty-profile smoke", empty_profiles);
  run("dimension identity, all groups", dimension_identity);
  run("S4 kernel: closed form equals stagewise product", s4_stagewise);
  run("A4 kernel: closed form equals stagewise product", a4_stagewise);
  run("S4 secondary kernels agree with sub-cover paths", s4_secondary_paths);
  run("Klein kernels agree with the 2-torsion model", klein_torsion_cases);
  run("composition identity on Klein towers", klein_towers);
  run("submodule laws (cardinality, double orthogonal, isotropy)", [&] {
    return full ? symplectic_laws({{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) : symplectic_laws({{2, 1}, {2, 2}, {3, 1}});
  });
  run("maximal isotropic submodules have order 2^g", [&] { return maximal_isotropic_sizes(full ? 3 : 2); });
  run("Klein 2-torsion model independent of eta choice", [&] { return klein_eta_independence(full ? 3 : 2); });
  run("torsion bookkeeping", torsion_counts);
  run("witness round trip through JSON", witness_round_trip);
  if (full) {
    run("unrealizable branch data exhausted", exhausted_proofs);
    run("small profiles searched for witnesses", small_profile_realizability, true);
  }
  return rep;
}

}  // namespace fourfold
