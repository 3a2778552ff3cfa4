#include <doctest.h>

#include <functional>

#include "fourfold/errors.hpp"
#include "fourfold/monodromy.hpp"
#include "fourfold/report.hpp"
#include "oracles.hpp"

using namespace fourfold;

namespace {

RamificationProfile s4(int g, int a, int b, int c, int d) {
  return RamificationProfile(GroupKind::Sym4, g, {{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}});
}

// Every parity-valid profile of the given base genus with at most max_points
// branch points.
std::vector<RamificationProfile> small_profiles(GroupKind k, int g, int max_points) {
  const auto& m = group_model(k);
  std::vector<RamificationProfile> out;
  std::vector<int> pts(m.symbols.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == pts.size()) {
      std::map<std::string, int> counts;
      for (std::size_t j = 0; j < pts.size(); ++j) counts[m.symbols[j].name] = pts[j] * m.symbols[j].units_per_point;
      RamificationProfile p(k, g, counts);
      if (parity_valid(p)) out.push_back(p);
      return;
    }
    for (int n = 0; used + n <= max_points; ++n) {
      pts[i] = n;
      rec(i + 1, used + n);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("search agrees with brute-force enumeration on small profiles") {
  int witnesses = 0, exhausted = 0;
  for (GroupKind k : all_kinds()) {
    const int max0 = k == GroupKind::Sym4 ? 5 : 4;
    for (int g = 0; g <= 1; ++g) {
      for (const auto& p : small_profiles(k, g, g == 0 ? max0 : 2)) {
        SearchOutcome o = search(p);
        INFO(p.to_string());
        REQUIRE(o.status != SearchOutcome::Status::BudgetExceeded);
        const bool found = o.status == SearchOutcome::Status::Witness;
        CHECK(found == oracle::small_genus_realizable(p));
        if (found) {
          ++witnesses;
          REQUIRE(o.witness);
          auto v = verify_tuple(*o.witness, p);
          CHECK(v.ok);
          // The S3 model fixes the fourth point, so its image is intransitive.
          CHECK(classify_image(*o.witness) == (k == GroupKind::Sym3 ? "INTRANSITIVE" : std::string(kind_name(k))));
        } else {
          ++exhausted;
        }
      }
    }
  }
  CHECK(witnesses > 0);
  CHECK(exhausted > 0);
}

TEST_CASE("witnesses stay valid under conjugation in S4") {
  int checked = 0;
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 300, 701, 1, 5)) {
    if (checked == 100) break;
    SearchOutcome o = search(p);
    if (o.status != SearchOutcome::Status::Witness) continue;
    ++checked;
    for (const auto& c : all_perms()) {
      HurwitzTuple t = *o.witness;
      for (auto& [a, b] : t.handles) {
        a = conjugate(c, a);
        b = conjugate(c, b);
      }
      for (auto& s : t.branch) s = conjugate(c, s);
      INFO(p.to_string() << " by " << c.to_string());
      CHECK(verify_tuple(t, p).ok);
      CHECK(classify_image(t) == "SYM4");
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("parity-violating data is exhausted without search") {
  SearchOutcome o = search(s4(0, 1, 0, 0, 2));
  CHECK(o.status == SearchOutcome::Status::ExhaustedNone);
  CHECK(o.nodes_explored == 0);
  CHECK(o.max_depth == 0);
  RamificationProfile half(GroupKind::Cyclic4, 1, {{"gamma", 3}, {"delta", 2}});
  CHECK_THROWS_AS(search(half), Error);
}

TEST_CASE("genus-seven example has a witness") {
  auto p = s4(0, 2, 0, 0, 2);
  SearchOutcome o = search(p);
  REQUIRE(o.status == SearchOutcome::Status::Witness);
  CHECK(verify_tuple(*o.witness, p).ok);
  CHECK(branch_product(*o.witness).is_identity());
  CHECK(generated_group(*o.witness) == group_model(GroupKind::Sym4).group->elements);
  CHECK(moduli_dim(p) == 1);
}

TEST_CASE("verification reports each failed condition") {
  auto p = s4(0, 2, 0, 0, 2);
  HurwitzTuple t;
  // (1 3) and (1 2 3 4) generate a dihedral group, and the product is not e.
  t.branch = {Perm::parse("(1 3)"), Perm::parse("(1 3)"), Perm::parse("(1 2 3 4)"), Perm::parse("(1 2 3 4)")};
  t.labels = {"alpha", "alpha", "delta", "delta"};
  auto v = verify_tuple(t, p);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostics.size() == 2);

  t.branch[0] = Perm::parse("(1 2 3)");
  auto w = verify_tuple(t, p);
  bool named = false;
  for (const auto& d : w.diagnostics) named = named || d.find("admissible alpha") != std::string::npos;
  CHECK(named);

  t.branch.pop_back();
  CHECK_THROWS_AS(verify_tuple(t, p), Error);
}

TEST_CASE("image classification") {
  HurwitzTuple t;
  t.branch = {Perm::parse("(1 2)"), Perm::parse("(1 2)")};
  CHECK(classify_image(t) == "INTRANSITIVE");
  t.branch = {Perm::parse("(1 2 3 4)"), Perm::parse("(1 4 3 2)")};
  CHECK(classify_image(t) == "CYCLIC4");
  t.branch = {Perm::parse("(1 2)(3 4)"), Perm::parse("(1 3)(2 4)"), Perm::parse("(1 4)(2 3)")};
  CHECK(classify_image(t) == "KLEIN");
}

TEST_CASE("serialization round trip") {
  for (GroupKind k : all_kinds()) {
    for (const auto& p : random_valid_profiles(k, 20, 711 + static_cast<int>(k), 2, 4)) {
      SearchOutcome o = search(p);
      if (o.status != SearchOutcome::Status::Witness) continue;
      HurwitzTuple back = deserialize(p.base_genus(), serialize(*o.witness));
      CHECK(back.handles == o.witness->handles);
      CHECK(back.branch == o.witness->branch);
      CHECK(back.labels == o.witness->labels);
      HurwitzTuple via_json = witness_from_json(witness_json(*o.witness, k));
      CHECK(via_json.branch == o.witness->branch);
      CHECK(verify_tuple(via_json, p).ok);
    }
  }
  CHECK_THROWS_AS(deserialize(0, {{"alpha", "(1 2"}}), Error);
}

TEST_CASE("parallel search agrees on status") {
  SearchOptions par;
  par.threads = 4;
  for (const auto& p : random_valid_profiles(GroupKind::Sym4, 30, 721, 1, 5)) {
    SearchOutcome a = search(p), b = search(p, par);
    INFO(p.to_string());
    CHECK(a.status == b.status);
    if (b.witness) CHECK(verify_tuple(*b.witness, p).ok);
  }
}

TEST_CASE("a tiny budget is reported, not treated as exhaustion") {
  SearchOptions tiny;
  tiny.budget = 1;
  SearchOutcome o = search(s4(2, 3, 2, 2, 3), tiny);
  CHECK(o.status == SearchOutcome::Status::BudgetExceeded);
  CHECK_FALSE(o.witness);
  CHECK(o.nodes_explored <= 2);
}

TEST_CASE("transitive mode accepts any conjugate class element") {
  auto p = s4(0, 2, 0, 0, 2);
  SearchOptions opts;
  opts.mode = SearchMode::TransitiveImage;
  SearchOutcome o = search(p, opts);
  REQUIRE(o.status == SearchOutcome::Status::Witness);
  CHECK(verify_tuple(*o.witness, p, SearchMode::TransitiveImage).ok);
  CHECK(parse_mode(mode_name(SearchMode::TransitiveImage)) == SearchMode::TransitiveImage);
  CHECK_THROWS_AS(parse_mode("abelian"), Error);
}

TEST_CASE("moduli dimension") {
  CHECK(moduli_dim(s4(0, 2, 0, 0, 2)) == 1);
  CHECK(moduli_dim(s4(2, 0, 0, 0, 0)) == 3);
  CHECK(moduli_dim(s4(1, 0, 1, 0, 0)) == 1);
  CHECK_THROWS_AS(moduli_dim(s4(1, 0, 0, 0, 0)), Error);
  CHECK_THROWS_AS(moduli_dim(s4(0, 2, 0, 0, 0)), Error);
}
