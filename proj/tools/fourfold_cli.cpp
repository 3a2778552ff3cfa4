// Command-line front end. JSON goes to stdout or --out; exit codes:
// 0 success, 1 internal error, 2 validation error, 3 table or suite
// mismatch, 4 search budget exhausted without a witness.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fourfold/errors.hpp"
#include "fourfold/report.hpp"

namespace {

using fourfold::Json;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kValidation = 2;
constexpr int kMismatch = 3;
constexpr int kBudget = 4;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw fourfold::Error(fourfold::ErrorKind::Parse, "cannot write " + out);
  f << text;
}

void emit(const Json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fourfold::Error(fourfold::ErrorKind::Parse, "cannot read " + path);
  try {
    return Json::parse(in, nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw fourfold::Error(fourfold::ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus, isogeny-kernel and monodromy analysis of Galois covers with group inside S4"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "write the JSON result to this file instead of stdout");

  std::string config, witness_path, table, scope = "fast";
  bool text = false;

  auto* analyze = app.add_subcommand("analyze", "full report for the profile in a config file");
  analyze->add_option("config", config, "key = value config file")->required();
  analyze->add_flag("--text", text, "human-readable rendering instead of JSON");

  auto* reproduce = app.add_subcommand("reproduce-table", "recompute an embedded table and diff it");
  reproduce->add_option("table", table, "table id, or 'all'")->required();

  auto* search = app.add_subcommand("search", "search for a Hurwitz tuple realizing the profile");
  search->add_option("config", config, "key = value config file")->required();

  auto* verify = app.add_subcommand("verify-witness", "check a witness file against a profile");
  verify->add_option("config", config, "key = value config file")->required();
  verify->add_option("witness", witness_path, "witness JSON file")->required();

  auto* suite = app.add_subcommand("verify-suite", "run the invariant and oracle checks");
  suite->add_option("--scope", scope, "fast or exhaustive")->check(CLI::IsMember({"fast", "exhaustive"}));

  auto* groups = app.add_subcommand("list-groups", "groups, branch symbols and curves");
  auto* tables = app.add_subcommand("list-tables", "ids accepted by reproduce-table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*analyze) {
      auto req = fourfold::load_request(config);
      auto rep = fourfold::analyze(req);
      if (text) emit(fourfold::render_text(rep.doc), out);
      else emit(rep.doc, out);
      if (!rep.valid) return kValidation;
      return rep.budget_exceeded ? kBudget : kOk;
    }
    if (*reproduce) {
      std::vector<std::string> ids = table == "all" ? fourfold::table_ids() : std::vector<std::string>{table};
      Json docs = Json::array();
      bool ok = true;
      for (const auto& id : ids) {
        auto rep = fourfold::reproduce_table(id);
        ok = ok && rep.ok();
        docs.push_back(rep.to_json());
      }
      emit(ids.size() == 1 ? docs.at(0) : Json{{"tables", docs}}, out);
      return ok ? kOk : kMismatch;
    }
    if (*search) {
      auto req = fourfold::load_request(config);
      fourfold::SearchOptions opt{req.mode, req.budget, req.threads};
      auto outcome = fourfold::search(req.profile, opt);
      Json doc = {{"profile", req.profile.to_string()}};
      const Json found = fourfold::search_json(req.profile, outcome, opt);
      for (const auto& [k, v] : found.items()) doc[k] = v;
      emit(doc, out);
      return outcome.status == fourfold::SearchOutcome::Status::BudgetExceeded ? kBudget : kOk;
    }
    if (*verify) {
      auto req = fourfold::load_request(config);
      Json w = read_json(witness_path);
      const Json& body = w.contains("witness") ? w.at("witness") : w;
      if (body.contains("group") && body.at("group") != fourfold::kind_name(req.profile.kind())) {
        throw fourfold::Error(fourfold::ErrorKind::Schema, "witness group differs from the config group");
      }
      auto tuple = fourfold::witness_from_json(w);
      auto res = fourfold::verify_tuple(tuple, req.profile, req.mode);
      Json doc = {{"profile", req.profile.to_string()},
                  {"mode", fourfold::mode_name(req.mode)},
                  {"ok", res.ok},
                  {"image", fourfold::classify_image(tuple)},
                  {"diagnostics", res.diagnostics}};
      emit(doc, out);
      return res.ok ? kOk : kValidation;
    }
    if (*suite) {
      auto rep = fourfold::verify_suite(fourfold::parse_scope(scope));
      emit(rep.to_json(), out);
      return rep.ok() ? kOk : kMismatch;
    }
    if (*groups) {
      emit(fourfold::list_groups(), out);
      return kOk;
    }
    if (*tables) {
      emit(Json{{"tables", fourfold::table_ids()}}, out);
      return kOk;
    }
  } catch (const fourfold::Error& e) {
    std::cout << fourfold::error_json(e).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == fourfold::ErrorKind::Internal ? kInternal : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
