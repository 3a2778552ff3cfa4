#include <doctest.h>

#include <sstream>

#include "fourfold/errors.hpp"
#include "fourfold/report.hpp"

using namespace fourfold;

namespace {

AnalysisRequest parse(const std::string& text) {
  std::istringstream in(text);
  return parse_request(in);
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("config was accepted: " << text);
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("config parsing") {
  auto r = parse("group = SYM4\ng = 0\n; comment line\nalpha = 2\ndelta = 2\nwant_witness = yes\nthreads = 2\n");
  CHECK(r.profile.kind() == GroupKind::Sym4);
  CHECK(r.profile.count("alpha") == 2);
  CHECK(r.profile.count("beta") == 0);
  CHECK(r.want_witness);
  CHECK(r.threads == 2);
  CHECK(r.budget == 100'000'000u);

  auto f = parse("group = SYM4\ng = 1\nalpha = 2\nbeta = 1\ng_isotropic = true\nzeta = 0\nmode = TRANSITIVE_IMAGE\n");
  CHECK(f.flags.g_isotropic == true);
  CHECK(f.flags.zeta == 0);
  CHECK_FALSE(f.flags.p2_in_perp);
  CHECK(f.mode == SearchMode::TransitiveImage);
}

TEST_CASE("config errors carry their kind") {
  CHECK(kind_of("g = 0\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nepsilon = 1\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nalpha = two\n") == ErrorKind::Parse);
  CHECK(kind_of("group = SYM4\nalpha = -1\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nthreads = 0\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nbudget = 0\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nzeta = 2\ng = 1\n") == ErrorKind::Schema);
  CHECK(kind_of("group = SYM4\nwant_witness = maybe\n") == ErrorKind::Parse);
  CHECK(kind_of("[section]\ngroup = SYM4\n") == ErrorKind::Schema);
  CHECK(kind_of("group = S5\n") == ErrorKind::Schema);
  // Two gamma/delta points decide every S4 secondary kernel.
  CHECK(kind_of("group = SYM4\ng = 1\ngamma = 1\ndelta = 1\nalpha = 1\nzeta = 1\n") == ErrorKind::Schema);
  CHECK_THROWS_AS(load_request("/nonexistent/config.ini"), Error);
}

TEST_CASE("analysis of the genus-seven example") {
  auto req = parse("group = SYM4\ng = 0\nalpha = 2\ndelta = 2\nwant_witness = true\n");
  AnalysisReport rep = analyze(req);
  CHECK(rep.valid);
  CHECK_FALSE(rep.budget_exceeded);
  const Json& d = rep.doc;
  CHECK(d["status"] == "ok");
  CHECK(d["signature"]["text"] == "(0; 2, 2, 4, 4)");
  CHECK(d["genus_table"]["genera"]["W"] == 7);
  CHECK(d["decomposition"]["dimension_total"] == 7);
  CHECK(d["decomposition"]["dimension_identity"] == true);
  CHECK(d["decomposition"]["main"]["value"]["text"] == "2^14*3");
  CHECK(d["realizability"]["status"] == "WITNESS");
  CHECK(d["moduli"] == 1);
  HurwitzTuple w = witness_from_json(d["realizability"]);
  CHECK(verify_tuple(w, req.profile).ok);
  for (const auto& c : d["cross_checks"]) CHECK(c["agree"] == true);
  bool connectivity = false;
  for (const auto& warn : d["warnings"]) connectivity = connectivity || warn.get<std::string>().find("connectivity") != std::string::npos;
  CHECK(connectivity);

  std::string text = render_text(d);
  CHECK(text.find("signature (0; 2, 2, 4, 4)") != std::string::npos);
  CHECK(text.find("W=7") != std::string::npos);
}

TEST_CASE("parity violations are reported, not analysed") {
  AnalysisReport rep = analyze(parse("group = SYM4\ng = 0\nalpha = 1\ndelta = 2\n"));
  CHECK_FALSE(rep.valid);
  CHECK(rep.doc["status"] == "invalid");
  CHECK(rep.doc["violations"][0]["type"] == "PARITY");
  CHECK_FALSE(rep.doc.contains("decomposition"));
}

TEST_CASE("conditional kernels list both alternatives") {
  AnalysisReport rep = analyze(parse("group = SYM4\ng = 1\nalpha = 2\nbeta = 1\n"));
  int pairs = 0;
  for (const auto& k : rep.doc["decomposition"]["secondary"]) {
    if (!k.contains("alternatives")) continue;
    ++pairs;
    CHECK(k["alternatives"].size() == 2);
  }
  CHECK(pairs == 3);
}

TEST_CASE("a rigid cover between rational curves is noted") {
  AnalysisReport rep = analyze(parse("group = SYM4\ng = 0\nalpha = 1\nbeta = 1\ndelta = 1\n"));
  CHECK(rep.doc["genus_table"]["genera"]["W"] == 0);
  bool noted = false;
  for (const auto& n : rep.doc["notes"]) noted = noted || n.get<std::string>().find("rational map of degree 24") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("search budget exhaustion is flagged") {
  AnalysisReport rep =
      analyze(parse("group = SYM4\ng = 2\nalpha = 3\nbeta = 2\ngamma = 2\ndelta = 3\nwant_witness = true\nbudget = 1\n"));
  CHECK(rep.budget_exceeded);
  CHECK(rep.doc["realizability"]["status"] == "BUDGET_EXCEEDED");
}

TEST_CASE("golden tables and catalog errors") {
  CHECK(golden_names().size() == 5);
  CHECK(golden("genus7")["genera"]["W"] == 7);
  CHECK_THROWS_AS(golden("nothing"), Error);
  CHECK_THROWS_AS(reproduce_table("no-such-table"), Error);
  try {
    reproduce_table("no-such-table");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Catalog);
    CHECK(error_json(e)["error"]["kind"] == "CATALOG");
  }
  auto t = reproduce_table("genus7");
  CHECK(t.ok());
  CHECK(t.cells_checked > 0);
  CHECK(parse_scope("fast") == SuiteScope::Fast);
  CHECK_THROWS_AS(parse_scope("slow"), Error);
}

TEST_CASE("group listing names every model") {
  Json groups = list_groups();
  CHECK(groups["groups"].size() == all_kinds().size());
}

TEST_CASE("random valid profiles are reproducible") {
  auto a = random_valid_profiles(GroupKind::Dihedral8, 10, 3), b = random_valid_profiles(GroupKind::Dihedral8, 10, 3);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_string() == b[i].to_string());
    CHECK(validate(a[i]).empty());
  }
}
