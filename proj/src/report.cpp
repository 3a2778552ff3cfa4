#include "fourfold/report.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fourfold/errors.hpp"
#include "fourfold/genus.hpp"

namespace fourfold {

namespace {

long long parse_int(const std::string& key, const std::string& text) {
  long long v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::Parse, "key '" + key + "' expects an integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw Error(ErrorKind::Parse, "key '" + key + "' expects true or false, got '" + text + "'");
}

Json counts_json(const RamificationProfile& p) {
  Json c = Json::object();
  for (std::size_t i = 0; i < p.model().symbols.size(); ++i) c[p.model().symbols[i].name] = p.count_at(i);
  return c;
}

Json table_json(const GenusTable& t) {
  Json genera = Json::object();
  for (const auto& e : t.genera) genera[e.curve] = e.genus;
  Json arrows = Json::array();
  for (const auto& a : t.arrows) {
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"degree", a.degree}, {"ram", a.ram}});
  }
  return {{"genera", genera}, {"arrows", arrows}};
}

bool same_kernel(const KernelResult& a, const KernelResult& b) {
  if (!a.error.empty() || !b.error.empty()) return !a.error.empty() && !b.error.empty();
  if (a.value || b.value) return a.value == b.value;
  if (a.alternatives.size() != b.alternatives.size()) return false;
  for (std::size_t i = 0; i < a.alternatives.size(); ++i) {
    if (!(a.alternatives[i].value == b.alternatives[i].value)) return false;
  }
  return true;
}

template <class F>
KernelResult capture(const std::string& name, F compute) {
  try {
    return compute();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Domain) throw;
    KernelResult r;
    r.name = name;
    r.error = e.what();
    return r;
  }
}

Json cross_checks(const RamificationProfile& p, const CaseFlags& flags) {
  Json out = Json::array();
  if (p.kind() == GroupKind::Sym4) {
    try {
      auto st = kernel_s4_stagewise(p);
      auto closed = kernel_main(p);
      out.push_back({{"name", "main kernel: closed form vs stagewise product"},
                     {"closed_form", card_json(closed)},
                     {"stagewise", {{"phi_U", card_json(st.phi_u)},
                                    {"phi_S3", card_json(st.phi_s3)},
                                    {"nu", card_json(st.nu_sum)},
                                    {"pair_cubed", card_json(st.pair_sum)},
                                    {"product", card_json(st.product)}}},
                     {"agree", closed == st.product}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
      out.push_back({{"name", "main kernel: closed form vs stagewise product"}, {"error", e.what()}});
    }
    auto direct3 = capture("s4_cy", [&] { return kernel_s4_iii(p, flags.p2_in_perp); });
    auto via3 = capture("s4_cy", [&] { return kernel_s4_iii_via_a4(p, flags.p2_in_perp); });
    out.push_back({{"name", "s4_cy: table vs alternating-group path"},
                   {"table", kernel_json(direct3)},
                   {"path", kernel_json(via3)},
                   {"agree", same_kernel(direct3, via3)}});
    auto direct4 = capture("s4_zc", [&] { return kernel_s4_iv(p, flags.g_isotropic); });
    auto via4 = capture("s4_zc", [&] { return kernel_s4_iv_via_d4(p, flags.g_isotropic); });
    out.push_back({{"name", "s4_zc: table vs dihedral path"},
                   {"table", kernel_json(direct4)},
                   {"path", kernel_json(via4)},
                   {"agree", same_kernel(direct4, via4)}});
  } else if (p.kind() == GroupKind::Alt4) {
    try {
      auto closed = kernel_main(p);
      auto staged = kernel_a4_stagewise(p);
      out.push_back({{"name", "main kernel: closed form vs stagewise product"},
                     {"closed_form", card_json(closed)},
                     {"stagewise", card_json(staged)},
                     {"agree", closed == staged}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
      out.push_back({{"name", "main kernel: closed form vs stagewise product"}, {"error", e.what()}});
    }
  }
  return out;
}

}  // namespace

AnalysisRequest parse_request(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  std::map<std::string, std::string> kv;
  for (const auto& [key, node] : tree) {
    if (!node.empty()) throw Error(ErrorKind::Schema, "sections are not supported: [" + key + "]");
    kv[key] = node.data();
  }
  auto group = kv.find("group");
  if (group == kv.end()) throw Error(ErrorKind::Schema, "missing key 'group'");
  const GroupKind kind = parse_kind(group->second);
  const GroupModel& model = group_model(kind);

  int g = 0;
  std::map<std::string, int> counts;
  AnalysisRequest req;
  for (const auto& [key, text] : kv) {
    if (key == "group") continue;
    if (key == "g") {
      g = static_cast<int>(parse_int(key, text));
    } else if (key == "g_isotropic") {
      req.flags.g_isotropic = parse_bool(key, text);
    } else if (key == "p2_in_perp") {
      req.flags.p2_in_perp = parse_bool(key, text);
    } else if (key == "zeta") {
      long long z = parse_int(key, text);
      if (z != 0 && z != 1) throw Error(ErrorKind::Schema, "zeta must be 0 or 1");
      req.flags.zeta = static_cast<int>(z);
    } else if (key == "budget") {
      long long b = parse_int(key, text);
      if (b <= 0) throw Error(ErrorKind::Schema, "budget must be positive");
      req.budget = static_cast<std::uint64_t>(b);
    } else if (key == "want_witness") {
      req.want_witness = parse_bool(key, text);
    } else if (key == "mode") {
      req.mode = parse_mode(text);
    } else if (key == "threads") {
      long long t = parse_int(key, text);
      if (t < 1 || t > 256) throw Error(ErrorKind::Schema, "threads must be in 1..256");
      req.threads = static_cast<int>(t);
    } else {
      bool is_symbol = false;
      for (const auto& s : model.symbols) is_symbol = is_symbol || s.name == key;
      if (!is_symbol) {
        throw Error(ErrorKind::Schema, "unknown key '" + key + "' for group " + std::string(kind_name(kind)));
      }
      counts[key] = static_cast<int>(parse_int(key, text));
    }
  }
  if (g < 0) throw Error(ErrorKind::Schema, "g must be nonnegative");
  req.profile = RamificationProfile(kind, g, counts);
  auto unused = unconsumed_flags(req.profile, req.flags);
  if (!unused.empty()) {
    std::string list;
    for (const auto& f : unused) list += (list.empty() ? "" : ", ") + f;
    throw Error(ErrorKind::Schema, "flags not consumed by this profile: " + list);
  }
  return req;
}

AnalysisRequest load_request(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read config file " + path);
  return parse_request(in);
}

Json card_json(const FactoredCard& c) {
  auto dec = c.decimal(256);
  return {{"text", c.to_string()}, {"exp2", c.exp2()}, {"exp3", c.exp3()},
          {"decimal", dec ? Json(*dec) : Json(nullptr)}};
}

Json kernel_json(const KernelResult& k) {
  Json j = {{"name", k.name}, {"case", k.case_label}};
  if (!k.error.empty()) {
    j["error"] = k.error;
  } else if (k.value) {
    j["value"] = card_json(*k.value);
  } else {
    Json alts = Json::array();
    for (const auto& a : k.alternatives) alts.push_back({{"condition", a.condition}, {"value", card_json(a.value)}});
    j["alternatives"] = alts;
  }
  j["flags_used"] = k.flags_used;
  j["warnings"] = k.warnings;
  return j;
}

Json witness_json(const HurwitzTuple& tuple, GroupKind kind) {
  Json entries = Json::array();
  for (const auto& [label, perm] : serialize(tuple)) entries.push_back({{"label", label}, {"perm", perm}});
  return {{"group", kind_name(kind)}, {"base_genus", tuple.base_genus}, {"entries", entries}};
}

HurwitzTuple witness_from_json(const Json& doc) {
  const Json& w = doc.contains("witness") ? doc.at("witness") : doc;
  if (!w.is_object() || !w.contains("base_genus") || !w.contains("entries") || !w.at("entries").is_array()) {
    throw Error(ErrorKind::Schema, "a witness needs base_genus and an entries list");
  }
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& e : w.at("entries")) {
    if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string()) {
      entries.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    } else if (e.is_object() && e.contains("label") && e.contains("perm") && e.at("label").is_string() &&
               e.at("perm").is_string()) {
      entries.emplace_back(e.at("label").get<std::string>(), e.at("perm").get<std::string>());
    } else {
      throw Error(ErrorKind::Schema, "witness entries are {label, perm} pairs");
    }
  }
  if (!w.at("base_genus").is_number_integer()) throw Error(ErrorKind::Schema, "base_genus must be an integer");
  return deserialize(w.at("base_genus").get<int>(), entries);
}

Json search_json(const RamificationProfile& profile, const SearchOutcome& o, const SearchOptions& opt,
                 bool include_witness) {
  Json j = {{"mode", mode_name(opt.mode)},
            {"status", status_name(o.status)},
            {"nodes_explored", o.nodes_explored},
            {"max_depth", o.max_depth},
            {"budget", opt.budget},
            {"threads", opt.threads},
            {"witness_nondeterministic", opt.threads > 1}};
  if (o.witness) {
    j["image"] = classify_image(*o.witness);
    j["image_order"] = generated_group(*o.witness).count();
    if (include_witness) j["witness"] = witness_json(*o.witness, profile.kind());
  }
  return j;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "PARSE";
    case ErrorKind::Catalog: return "CATALOG";
    case ErrorKind::Containment: return "CONTAINMENT";
    case ErrorKind::Schema: return "SCHEMA";
    case ErrorKind::Parity: return "PARITY";
    case ErrorKind::Domain: return "DOMAIN";
    case ErrorKind::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

Json error_json(const Error& e) {
  return {{"status", "error"}, {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
}

Json list_groups() {
  Json groups = Json::array();
  for (GroupKind k : all_kinds()) {
    const GroupModel& m = group_model(k);
    Json symbols = Json::array();
    for (const auto& s : m.symbols) {
      symbols.push_back({{"name", s.name},
                         {"display", s.display},
                         {"representative", s.representative.to_string()},
                         {"cycle_class", class_name(s.representative.cycle_class())},
                         {"units_per_point", s.units_per_point}});
    }
    Json curves = Json::array();
    for (const auto& c : m.curves) curves.push_back({{"name", c.name}, {"subgroup", c.subgroup}});
    groups.push_back({{"group", kind_name(k)},
                      {"order", group_order(k)},
                      {"embedding", m.group->name},
                      {"symbols", symbols},
                      {"curves", curves}});
  }
  return {{"groups", groups}};
}

AnalysisReport analyze(const AnalysisRequest& req) {
  const RamificationProfile& p = req.profile;
  AnalysisReport out;
  Json& doc = out.doc;
  doc["group"] = kind_name(p.kind());
  doc["base_genus"] = p.base_genus();
  doc["counts"] = counts_json(p);

  std::vector<std::string> warnings;
  Json violations = Json::array();
  bool parity_ok = true;
  for (const auto& v : validate(p)) {
    bool parity = v.type == Violation::Type::Parity;
    parity_ok = parity_ok && !parity;
    violations.push_back({{"type", parity ? "PARITY" : "CONNECTIVITY"}, {"rule", v.rule}});
    if (!parity) warnings.push_back("connectivity minimum not met: " + v.rule);
  }
  if (!parity_ok) {
    doc["status"] = "invalid";
    doc["violations"] = violations;
    out.valid = false;
    return out;
  }
  doc["status"] = "ok";
  SignatureType sig = signature(p);
  doc["signature"] = {{"text", sig.to_string()}, {"genus", sig.genus}, {"periods", sig.periods}};

  Json notes = Json::array();
  std::optional<GenusTable> table;
  try {
    table = genus_table(p);
    doc["genus_table"] = table_json(*table);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Internal) throw;
    doc["genus_table"] = {{"error", e.what()}};
    warnings.push_back("no genus table: the branch data do not describe a connected cover");
  }

  if (table) {
    DecompositionReport rep = decompose(p, req.flags);
    Json fs = Json::array();
    for (const auto& f : rep.factors) {
      fs.push_back({{"label", f.label},
                    {"multiplicity", f.multiplicity},
                    {"dim", f.dim},
                    {"representation", f.rep_label},
                    {"top", f.top},
                    {"bottom", f.bottom.empty() ? Json(nullptr) : Json(f.bottom)}});
    }
    Json secondary = Json::array();
    for (const auto& k : rep.secondary) {
      secondary.push_back(kernel_json(k));
      for (const auto& w : k.warnings) warnings.push_back(k.name + ": " + w);
    }
    for (const auto& w : rep.main.warnings) warnings.push_back(rep.main.name + ": " + w);
    doc["decomposition"] = {{"factors", fs},
                            {"dimension_total", rep.dimension_total},
                            {"top_genus", table->top_genus},
                            {"dimension_identity", rep.dimension_total == table->top_genus},
                            {"main", kernel_json(rep.main)},
                            {"secondary", secondary}};
    Json checks = cross_checks(p, req.flags);
    if (!checks.empty()) doc["cross_checks"] = checks;
    if (table->top_genus == 0 && p.base_genus() == 0) {
      notes.push_back("top and base curves are rational: the quotient map is a rational map of degree " +
                      std::to_string(group_order(p.kind())));
    }
  }

  SearchOptions opt{req.mode, req.budget, req.threads};
  SearchOutcome outcome = search(p, opt);
  doc["realizability"] = search_json(p, outcome, opt, req.want_witness);
  out.budget_exceeded = outcome.status == SearchOutcome::Status::BudgetExceeded;
  if (req.threads > 1) {
    warnings.push_back("parallel search: which witness is reported may vary between runs");
  }

  try {
    doc["moduli"] = moduli_dim(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Domain) throw;
    doc["moduli"] = "degenerate";
  }
  if (!violations.empty()) doc["violations"] = violations;
  doc["notes"] = notes;
  doc["warnings"] = warnings;
  return out;
}

namespace {

std::string card_text(const Json& c) { return c.at("text").get<std::string>(); }

void render_kernel(std::ostringstream& os, const Json& k) {
  os << "  " << k.at("name").get<std::string>();
  if (!k.at("case").get<std::string>().empty()) os << " [" << k.at("case").get<std::string>() << "]";
  if (k.contains("error")) {
    os << ": undefined (" << k.at("error").get<std::string>() << ")\n";
  } else if (k.contains("value")) {
    os << ": " << card_text(k.at("value")) << "\n";
  } else {
    os << ": conditional\n";
    for (const auto& a : k.at("alternatives")) {
      os << "    if " << a.at("condition").get<std::string>() << ": " << card_text(a.at("value")) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  os << doc.at("group").get<std::string>() << " over genus " << doc.at("base_genus").get<int>() << ":";
  for (const auto& [k, v] : doc.at("counts").items()) os << " " << k << "=" << v.get<int>();
  os << "\n";
  if (doc.at("status") == "invalid") {
    os << "invalid profile\n";
    for (const auto& v : doc.at("violations")) {
      os << "  " << v.at("type").get<std::string>() << ": " << v.at("rule").get<std::string>() << "\n";
    }
    return os.str();
  }
  os << "signature " << doc.at("signature").at("text").get<std::string>() << "\n";
  const Json& gt = doc.at("genus_table");
  if (gt.contains("genera")) {
    os << "genera:";
    for (const auto& [c, g] : gt.at("genera").items()) os << " " << c << "=" << g.get<int>();
    os << "\n";
  }
  if (doc.contains("decomposition")) {
    const Json& d = doc.at("decomposition");
    os << "isogeny factors:";
    for (const auto& f : d.at("factors")) {
      os << " " << f.at("label").get<std::string>();
      if (f.at("multiplicity").get<int>() > 1) os << "^" << f.at("multiplicity").get<int>();
      os << "(" << f.at("dim").get<int>() << ")";
    }
    os << ", total dimension " << d.at("dimension_total").get<int>() << "\n";
    os << "kernels:\n";
    render_kernel(os, d.at("main"));
    for (const auto& k : d.at("secondary")) render_kernel(os, k);
  }
  const Json& r = doc.at("realizability");
  os << "realizability (" << r.at("mode").get<std::string>() << "): " << r.at("status").get<std::string>()
     << " after " << r.at("nodes_explored").get<std::uint64_t>() << " nodes\n";
  if (r.contains("witness")) {
    os << "  witness:";
    for (const auto& e : r.at("witness").at("entries")) {
      os << " " << e.at("label").get<std::string>() << "=" << e.at("perm").get<std::string>();
    }
    os << "\n";
  }
  const Json& m = doc.at("moduli");
  os << "moduli dimension: " << (m.is_string() ? m.get<std::string>() : std::to_string(m.get<int>())) << "\n";
  for (const auto& n : doc.at("notes")) os << "note: " << n.get<std::string>() << "\n";
  for (const auto& w : doc.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
  return os.str();
}

}  // namespace fourfold
