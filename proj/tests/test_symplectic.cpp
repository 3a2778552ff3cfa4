#include <doctest.h>

#include <map>

#include "fourfold/errors.hpp"
#include "fourfold/symplectic.hpp"
#include "oracles.hpp"

using namespace fourfold;

TEST_CASE("module arithmetic") {
  SympModule m(2, 3);
  CHECK(m.size() == 81u);
  Vec x = m.make({1, 2, 0, 1});
  CHECK(m.coord(x, 1) == 2);
  CHECK(m.add(x, m.neg(x)) == 0u);
  CHECK(m.form(m.basis(0), m.basis(2)) == 1);
  CHECK(m.form(m.basis(2), m.basis(0)) == 2);
  CHECK(m.form(x, x) == 0);
  CHECK_THROWS_AS(SympModule(1, 5), Error);
  CHECK_THROWS_AS(SympModule(11, 2), Error);
}

TEST_CASE("orthogonal complements") {
  SympModule m1(1, 2);
  CHECK(orthogonal(span(m1, {})).size() == 4);
  CHECK(orthogonal(span(m1, {m1.basis(0)})) == span(m1, {m1.basis(0)}));
  SympModule m2(2, 2);
  for (Vec eta = 1; eta < m2.size(); ++eta) CHECK(orthogonal(span(m2, {eta})).size() == 8);
  CHECK(orthogonal(orthogonal(span(m2, {}))).size() == 1);
}

TEST_CASE("orthogonal agrees with a full scan") {
  for (auto [g, d] : {std::pair{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}) {
    SympModule m(g, d);
    oracle::Vecs scan{g, d};
    for (const auto& s : all_submodules(m)) {
      auto expected = scan.orthogonal(s.elements());
      CHECK(orthogonal(s).elements() == std::vector<Vec>(expected.begin(), expected.end()));
    }
  }
}

TEST_CASE("submodule counts match Gaussian binomials") {
  CHECK(all_submodules(SympModule(3, 2)).size() == 2825u);
  CHECK(all_submodules(SympModule(2, 3)).size() == 212u);
  for (int g = 1; g <= 2; ++g) {
    CHECK(static_cast<long long>(all_submodules(SympModule(g, 2)).size()) == oracle::subspace_count(2 * g, 2));
  }
  CHECK(oracle::subspace_count(6, 2) == 2825);
  CHECK(oracle::subspace_count(4, 3) == 212);
  CHECK_THROWS_AS(all_submodules(SympModule(4, 3)), Error);
}

TEST_CASE("cardinality law and double orthogonality on every submodule") {
  for (auto [g, d] : {std::pair{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}}) {
    SympModule m(g, d);
    for (const auto& s : all_submodules(m)) {
      CardinalityLaw law = cardinality_law_check(s);
      CHECK(law.holds);
      CHECK(law.size * law.perp_size == m.size());
      CHECK(orthogonal(orthogonal(s)) == s);
      CHECK(is_isotropic(s) == orthogonal(s).contains(s));
    }
  }
  SympModule m(2, 2);
  CHECK(cardinality_law_check(orthogonal(span(m, {}))).perp_size == 1u);
}

TEST_CASE("quotients") {
  SympModule m(2, 2);
  SubModule a = span(m, {m.basis(0), m.basis(1)}), b = span(m, {m.basis(0)});
  CHECK(quotient_size(a, b) == 2u);
  CHECK_THROWS_AS(quotient_size(b, a), Error);
  CHECK(intersection(a, span(m, {m.basis(1), m.basis(2)})).size() == 2);
  CHECK(sum(b, span(m, {m.basis(3)})).size() == 4);
  CHECK_THROWS_AS(from_elements(m, {0, 1, 2}), Error);
}

TEST_CASE("maximal isotropic submodules are the Lagrangians") {
  // Lagrangians of F2^(2g): prod_{i=1..g} (2^i + 1).
  const std::size_t lagrangians[] = {0, 3, 15, 135};
  for (int g = 1; g <= 3; ++g) {
    SympModule m(g, 2);
    auto max = maximal_isotropic(m);
    CHECK(max.size() == lagrangians[g]);
    for (const auto& s : max) CHECK(s.size() == (std::size_t{1} << g));
  }
}

TEST_CASE("Klein 2-torsion configurations of the first case") {
  for (int g = 2; g <= 3; ++g) {
    auto ia = klein_torsion_model(KleinTorsionCase::Ia, g);
    auto ib = klein_torsion_model(KleinTorsionCase::Ib, g);
    CHECK(ia.log2("a_sigma P cap a_tau P") == 2 * g - 4);
    CHECK(ib.log2("a_sigma P cap a_tau P") == 2 * g - 2);
    for (const char* j : {"sigma", "tau", "sigmatau"}) {
      CHECK(ia.log2(std::string("P_") + j + "[2]") == 2 * g - 2);
      CHECK(ib.log2(std::string("P_") + j + "[2]") == 2 * g - 2);
    }
  }
  CHECK(klein_torsion_model(KleinTorsionCase::Ia, 2).log2("(H_j+H_k)^perp/(H_j+H_k)") == 0);
  CHECK_THROWS_AS(klein_torsion_model(KleinTorsionCase::Ia, 1), Error);
  CHECK(klein_torsion_model(KleinTorsionCase::Ib, 1).log2("a_sigma P cap a_tau P") == 0);
  CHECK_THROWS_AS(klein_torsion_model(KleinTorsionCase::Ia, 2).log2("nothing"), Error);
}

TEST_CASE("first-case quantities depend only on the pairing of the eta classes") {
  for (int g = 1; g <= 3; ++g) {
    SympModule m(g, 2);
    std::map<int, std::vector<KleinTorsionQuantity>> seen;
    for (Vec a = 1; a < m.size(); ++a)
      for (Vec b = 1; b < m.size(); ++b) {
        if (a == b) continue;
        auto model = klein_torsion_case_one(m, a, b);
        auto [it, fresh] = seen.emplace(m.form(a, b), model.quantities);
        if (fresh) continue;
        REQUIRE(it->second.size() == model.quantities.size());
        for (std::size_t i = 0; i < model.quantities.size(); ++i) {
          CHECK(it->second[i].name == model.quantities[i].name);
          CHECK(it->second[i].log2 == model.quantities[i].log2);
        }
      }
    CHECK(seen.count(1) == 1);
    CHECK(seen.count(0) == (g >= 2 ? 1u : 0u));
  }
}

TEST_CASE("later cases validate their counts") {
  CHECK_THROWS_AS(klein_torsion_model(KleinTorsionCase::II, 2, 1, 2, 0), Error);
  CHECK_THROWS_AS(klein_torsion_model(KleinTorsionCase::III, 2, 2, 2, 2), Error);
  CHECK_THROWS_AS(klein_torsion_model(KleinTorsionCase::IVa, 2, 2, 2, 2), Error);
  auto iva = klein_torsion_model(KleinTorsionCase::IVa, 1, 1, 3, 1);
  CHECK_FALSE(iva.notes.empty());
  CHECK(parse_case(case_name(KleinTorsionCase::IVb)) == KleinTorsionCase::IVb);
  CHECK_THROWS_AS(parse_case("V"), Error);
}

TEST_CASE("2-torsion of a Prym by generator counting") {
  CHECK(p2_structure_count(2, 0).total_dim == 2);
  CHECK(p2_structure_count(1, 2).total_dim == 2);
  CHECK(p2_structure_count(1, 2).pullback_dim == 2);
  CHECK(p2_structure_count(0, 6).total_dim == 4);
  CHECK(p2_structure_count(0, 6).generator_dim == 4);
  for (int g = 0; g <= 5; ++g)
    for (int omega = 0; omega <= 10; omega += 2) {
      if (g == 0 && omega == 0) {
        CHECK_THROWS_AS(p2_structure_count(g, omega), Error);
        continue;
      }
      auto rec = p2_structure_count(g, omega);
      CHECK(rec.total_dim == rec.pullback_dim + rec.generator_dim);
      CHECK(rec.total_dim == 2 * g - 2 + omega);
      CHECK(rec.expected_dim == rec.total_dim);
    }
  CHECK_THROWS_AS(p2_structure_count(1, 3), Error);
}

TEST_CASE("3-torsion group of a cyclic triple cover") {
  CHECK(degree3_L_count(1, 0) == FactoredCard(0, 2));
  CHECK(degree3_L_count(0, 3) == FactoredCard(0, 2));
  CHECK(degree3_L_count(0, 0) == FactoredCard(0, 0));
  for (int g = 0; g <= 3; ++g)
    for (int a = 0; a <= 5; ++a) CHECK(degree3_L_count(g, a) == FactoredCard(0, 2 * g + (a >= 2 ? a - 1 : 0)));
}
