#include <algorithm>
#include <random>
#include <sstream>

#include "fourfold/errors.hpp"
#include "fourfold/genus.hpp"
#include "fourfold/report.hpp"
#include "golden_data.hpp"

namespace fourfold {

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < detail::kGoldenFileCount; ++i) v.emplace_back(detail::kGoldenFiles[i].name);
    return v;
  }();
  return names;
}

const std::string& golden_text(std::string_view name) {
  static const std::vector<std::string> texts = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < detail::kGoldenFileCount; ++i) v.emplace_back(detail::kGoldenFiles[i].text);
    return v;
  }();
  const auto& names = golden_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorKind::Catalog, "no golden table named " + std::string(name));
  return texts[static_cast<std::size_t>(it - names.begin())];
}

Json golden(std::string_view name) {
  try {
    return Json::parse(golden_text(name), nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Internal, "golden table " + std::string(name) + " does not parse: " + e.what());
  }
}

std::vector<RamificationProfile> random_valid_profiles(GroupKind kind, int count, std::uint64_t seed, int max_g,
                                                       int max_count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gd(0, max_g), cd(0, max_count);
  const GroupModel& m = group_model(kind);
  std::vector<RamificationProfile> out;
  for (long attempts = 0; static_cast<int>(out.size()) < count; ++attempts) {
    if (attempts > 1'000'000) throw Error(ErrorKind::Internal, "profile generator made no progress");
    std::map<std::string, int> counts;
    int g = gd(rng);
    for (const auto& s : m.symbols) counts[s.name] = cd(rng);
    RamificationProfile p(kind, g, counts);
    if (validate(p).empty()) out.push_back(p);
  }
  return out;
}

namespace {

RamificationProfile s4_profile(int g, int alpha, int beta, int gamma, int delta) {
  return RamificationProfile(GroupKind::Sym4, g, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}});
}

std::string form_text(const Json& form) {
  std::ostringstream os;
  long long den = 1;
  bool first = true;
  for (const auto& [key, v] : form.items()) {
    if (key == "den") {
      den = v.get<long long>();
      continue;
    }
    long long c = v.get<long long>();
    std::string var = key == "const" ? "" : key;
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    long long a = c < 0 ? -c : c;
    if (var.empty() || a != 1) os << a;
    os << var;
    first = false;
  }
  if (first) os << "0";
  return den == 1 ? os.str() : "(" + os.str() + ")/" + std::to_string(den);
}

// Exact value of a golden linear form; nullopt if the division is inexact.
std::optional<long long> eval_form(const Json& form, const RamificationProfile& p) {
  long long sum = 0, den = 1;
  for (const auto& [key, v] : form.items()) {
    long long c = v.get<long long>();
    if (key == "den") den = c;
    else if (key == "g") sum += c * p.base_genus();
    else if (key == "const") sum += c;
    else sum += c * p.count(key);
  }
  if (sum % den != 0) return std::nullopt;
  return sum / den;
}

long long affine(const Json& ab, int gamma) { return ab.at(0).get<long long>() * gamma + ab.at(1).get<long long>(); }

class Table {
 public:
  explicit Table(std::string id) { rep_.id = std::move(id); }

  void begin_row(const std::string& label, const std::string& profile) {
    flush();
    row_ = {{"case", label}, {"profile", profile}, {"cells", Json::array()}};
    open_ = true;
  }

  void cell(const std::string& column, const Json& expected, const Json& computed) {
    bool match = expected == computed;
    row_["cells"].push_back({{"column", column}, {"expected", expected}, {"computed", computed}, {"match", match}});
    ++rep_.cells_checked;
    if (!match) {
      rep_.mismatches.push_back(row_["case"].get<std::string>() + " " + row_["profile"].get<std::string>() + " " +
                                column + ": expected " + expected.dump() + ", computed " + computed.dump());
    }
  }

  TableReport finish() {
    flush();
    return std::move(rep_);
  }

  TableReport& report() { return rep_; }

 private:
  void flush() {
    if (open_) rep_.rows.push_back(std::move(row_));
    open_ = false;
  }

  TableReport rep_;
  Json row_;
  bool open_ = false;
};

std::string card_str(std::int64_t e2, std::int64_t e3) { return FactoredCard(e2, e3).to_string(); }

Json kernel_str(const RamificationProfile& p) {
  try {
    return kernel_main(p).to_string();
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

TableReport genus_table_report(const std::string& id, GroupKind kind, std::uint64_t seed) {
  const Json g = golden("genus").at(std::string(kind_name(kind)));
  auto profiles = random_valid_profiles(kind, 200, seed);
  struct Column {
    std::string name;
    std::string form;
    int checked = 0;
    int matched = 0;
  };
  std::vector<Column> cols;
  for (const auto& [curve, form] : g.at("genera").items()) cols.push_back({"genus " + curve, form_text(form)});
  for (const auto& r : g.at("ram")) {
    cols.push_back({"ram " + r.at("from").get<std::string>() + "->" + r.at("to").get<std::string>(),
                    form_text(r.at("form"))});
  }
  TableReport rep;
  rep.id = id;
  auto record = [&](Column& c, const RamificationProfile& p, std::optional<long long> want, long long got) {
    ++c.checked;
    ++rep.cells_checked;
    if (want && *want == got) {
      ++c.matched;
    } else if (rep.mismatches.size() < 100) {
      rep.mismatches.push_back(p.to_string() + " " + c.name + ": expected " +
                               (want ? std::to_string(*want) : std::string("non-integer")) + ", computed " +
                               std::to_string(got));
    }
  };
  for (const auto& p : profiles) {
    GenusTable t = genus_table(p);
    std::size_t i = 0;
    for (const auto& [curve, form] : g.at("genera").items()) record(cols[i++], p, eval_form(form, p), t.genus(curve));
    for (const auto& r : g.at("ram")) {
      record(cols[i++], p, eval_form(r.at("form"), p),
             t.ram(r.at("from").get<std::string>(), r.at("to").get<std::string>()));
    }
  }
  for (const auto& c : cols) {
    rep.rows.push_back({{"column", c.name}, {"form", c.form}, {"profiles", c.checked}, {"matched", c.matched}});
  }
  return rep;
}

TableReport families_genera() {
  Table t("families-genera");
  const Json families_doc = golden("families");
  for (const auto& r : families_doc.at("rows")) {
    for (int gm = r.at("gamma_min").get<int>(); gm <= 4; ++gm) {
      auto p = s4_profile(0, r.at("alpha"), r.at("beta"), gm, r.at("delta"));
      GenusTable g = genus_table(p);
      t.begin_row(r.at("case"), p.to_string());
      t.cell("g_Delta", r.at("g_Delta"), g.genus("Delta"));
      t.cell("g_S", affine(r.at("g_S"), gm), g.genus("S"));
      t.cell("g_V", affine(r.at("g_V"), gm), g.genus("V"));
      t.cell("g_W", affine(r.at("g_W"), gm), g.genus("W"));
    }
  }
  return t.finish();
}

TableReport families_degrees() {
  Table t("families-degrees");
  const Json families_doc = golden("families");
  for (const auto& r : families_doc.at("rows")) {
    for (int gm = r.at("gamma_min").get<int>(); gm <= 4; ++gm) {
      auto p = s4_profile(0, r.at("alpha"), r.at("beta"), gm, r.at("delta"));
      t.begin_row(r.at("case"), p.to_string());
      t.cell("degree", card_str(affine(r.at("deg_exp2"), gm), r.at("deg_exp3").get<int>()), kernel_str(p));
      t.cell("moduli", affine(r.at("moduli"), gm), moduli_dim(p));
    }
  }
  return t.finish();
}

// Witness expected: the search must find one and the tuple must verify.
Json realizability_cell(const RamificationProfile& p, bool* ok_witness) {
  SearchOutcome o = search(p);
  *ok_witness = o.witness && verify_tuple(*o.witness, p).ok;
  return std::string(status_name(o.status));
}

TableReport families_realizability() {
  Table t("families-realizability");
  const Json f = golden("families");
  for (const auto& r : f.at("rows")) {
    auto p = s4_profile(0, r.at("alpha"), r.at("beta"), r.at("gamma_min"), r.at("delta"));
    t.begin_row(r.at("case"), p.to_string());
    bool verified = false;
    Json status = realizability_cell(p, &verified);
    t.cell("search", "WITNESS", status);
    t.cell("witness verifies", true, verified);
  }
  for (const auto& r : f.at("unrealizable")) {
    auto p = s4_profile(0, r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta"));
    t.begin_row(r.at("case"), p.to_string());
    t.cell("search", "EXHAUSTED_NONE", std::string(status_name(search(p).status)));
  }
  return t.finish();
}

RamificationProfile one_param_profile(const Json& r) {
  return s4_profile(r.at("g"), r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta"));
}

TableReport one_param() {
  Table t("one-param");
  const Json one_param_doc = golden("one_param");
  for (const auto& r : one_param_doc.at("rows")) {
    auto p = one_param_profile(r);
    GenusTable g = genus_table(p);
    t.begin_row(r.at("case"), p.to_string());
    for (const char* c : {"R", "S", "V", "X", "W"}) t.cell(std::string("g_") + c, r.at(std::string("g_") + c), g.genus(c));
    if (!r.at("degree").is_null()) {
      t.cell("degree", card_str(r.at("degree").at(0), r.at("degree").at(1)), kernel_str(p));
    }
  }
  return t.finish();
}

TableReport one_param_realizability() {
  Table t("one-param-realizability");
  const Json one_param_doc = golden("one_param");
  for (const auto& r : one_param_doc.at("rows")) {
    auto p = one_param_profile(r);
    t.begin_row(r.at("case"), p.to_string());
    bool verified = false;
    Json status = realizability_cell(p, &verified);
    t.cell("search", "WITNESS", status);
    t.cell("witness verifies", true, verified);
  }
  return t.finish();
}

TableReport rigid() {
  Table t("rigid");
  const Json rigid_doc = golden("rigid");
  for (const auto& r : rigid_doc.at("rows")) {
    auto p = s4_profile(0, r.at("alpha"), r.at("beta"), r.at("gamma"), r.at("delta"));
    t.begin_row(r.at("case"), p.to_string());
    SearchOutcome o = search(p);
    if (!r.at("realizable").get<bool>()) {
      t.cell("search", "EXHAUSTED_NONE", std::string(status_name(o.status)));
      continue;
    }
    t.cell("search", "WITNESS", std::string(status_name(o.status)));
    t.cell("witness verifies", true, o.witness.has_value() && verify_tuple(*o.witness, p).ok);
    t.cell("g_W", r.at("g_W"), genus_top(p));
    if (r.contains("monodromy_order")) {
      t.cell("monodromy_order", r.at("monodromy_order"),
             o.witness ? static_cast<int>(generated_group(*o.witness).count()) : 0);
    }
    if (r.contains("degree")) t.cell("degree", card_str(r.at("degree").at(0), r.at("degree").at(1)), kernel_str(p));
  }
  return t.finish();
}

TableReport genus7() {
  Table t("genus7");
  const Json j = golden("genus7");
  const Json& pr = j.at("profile");
  auto p = s4_profile(pr.at("g"), pr.at("alpha"), pr.at("beta"), pr.at("gamma"), pr.at("delta"));
  GenusTable g = genus_table(p);
  t.begin_row("genus seven", p.to_string());
  for (const auto& [curve, want] : j.at("genera").items()) t.cell("g_" + curve, want, g.genus(curve));
  return t.finish();
}

}  // namespace

Json TableReport::to_json() const {
  return {{"table", id},
          {"status", ok() ? "match" : "mismatch"},
          {"cells_checked", cells_checked},
          {"mismatches", mismatches},
          {"rows", rows}};
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {
      "genus-cyclic",  "genus-klein",      "genus-d4",       "genus-a4",
      "genus-s4",      "families-genera",  "families-degrees", "families-realizability",
      "one-param",     "one-param-realizability", "rigid",     "genus7"};
  return ids;
}

TableReport reproduce_table(std::string_view id) {
  if (id == "genus-cyclic") return genus_table_report(std::string(id), GroupKind::Cyclic4, 101);
  if (id == "genus-klein") return genus_table_report(std::string(id), GroupKind::Klein, 102);
  if (id == "genus-d4") return genus_table_report(std::string(id), GroupKind::Dihedral8, 103);
  if (id == "genus-a4") return genus_table_report(std::string(id), GroupKind::Alt4, 104);
  if (id == "genus-s4") return genus_table_report(std::string(id), GroupKind::Sym4, 105);
  if (id == "families-genera") return families_genera();
  if (id == "families-degrees") return families_degrees();
  if (id == "families-realizability") return families_realizability();
  if (id == "one-param") return one_param();
  if (id == "one-param-realizability") return one_param_realizability();
  if (id == "rigid") return rigid();
  if (id == "genus7") return genus7();
  throw Error(ErrorKind::Catalog, "unknown table id: " + std::string(id));
}

}  // namespace fourfold
