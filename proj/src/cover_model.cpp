#include "fourfold/cover_model.hpp"

#include <sstream>

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

Perm P(const char* text) { return Perm::parse(text); }

BranchSymbol symbol(std::string name, std::string display, const char* rep, PermSet candidates,
                    int units = 1) {
  return BranchSymbol{std::move(name), std::move(display), P(rep), candidates, units};
}

PermSet set_of(std::initializer_list<const char*> texts) {
  PermSet s;
  for (const char* t : texts) s.set(P(t).index());
  return s;
}

PermSet s4_class(const char* rep) {
  return conjugacy_class_in(P(rep), subgroup_by_name("S4").elements);
}

GroupModel build(GroupKind kind) {
  GroupModel m{kind, nullptr, {}, {}};
  switch (kind) {
    case GroupKind::Cyclic4:
      m.group = &subgroup_by_name("C4(1 3 2 4)");
      m.symbols = {symbol("gamma", "γ", "(1 2)(3 4)", set_of({"(1 2)(3 4)"}), 2),
                   symbol("delta", "δ", "(1 3 2 4)", set_of({"(1 3 2 4)", "(1 4 2 3)"}))};
      m.curves = {{"X", "TRIVIAL"}, {"F", "T2x2(1 2)(3 4)"}, {"T", "C4(1 3 2 4)"}};
      break;
    case GroupKind::Klein:
      m.group = &subgroup_by_name("KLEIN_NORMAL");
      m.symbols = {symbol("s", "s", "(1 2)(3 4)", set_of({"(1 2)(3 4)"})),
                   symbol("t", "t", "(1 3)(2 4)", set_of({"(1 3)(2 4)"})),
                   symbol("r", "r", "(1 4)(2 3)", set_of({"(1 4)(2 3)"}))};
      m.curves = {{"X", "TRIVIAL"},
                  {"X_sigma", "T2x2(1 2)(3 4)"},
                  {"X_tau", "T2x2(1 3)(2 4)"},
                  {"X_sigmatau", "T2x2(1 4)(2 3)"},
                  {"T", "KLEIN_NORMAL"}};
      break;
    case GroupKind::Dihedral8:
      // r = (1 3 2 4), s = (3 4); r^2 = (1 2)(3 4), r^2 s = (1 2),
      // r s = (1 3)(2 4), r^3 s = (1 4)(2 3).
      m.group = &subgroup_by_name("D4(2)");
      m.symbols = {symbol("delta", "δ", "(1 3 2 4)", set_of({"(1 3 2 4)", "(1 4 2 3)"})),
                   symbol("alpha", "α", "(3 4)", set_of({"(3 4)", "(1 2)"})),
                   symbol("gamma1", "γ1", "(1 3)(2 4)", set_of({"(1 3)(2 4)", "(1 4)(2 3)"})),
                   symbol("gamma2", "γ2", "(1 2)(3 4)", set_of({"(1 2)(3 4)"}))};
      m.curves = {{"W", "TRIVIAL"},
                  {"W_s", "T2(3 4)"},
                  {"W_r2s", "T2(1 2)"},
                  {"W_rs", "T2x2(1 3)(2 4)"},
                  {"W_r3s", "T2x2(1 4)(2 3)"},
                  {"W_r2", "T2x2(1 2)(3 4)"},
                  {"W_Ks", "KLEIN(2)"},
                  {"W_Krs", "KLEIN_NORMAL"},
                  {"W_r", "C4(1 3 2 4)"},
                  {"T", "D4(2)"}};
      break;
    case GroupKind::Alt4: {
      PermSet threes = s4_class("(1 2 3)");
      m.group = &subgroup_by_name("A4");
      m.symbols = {BranchSymbol{"beta", "β", P("(1 2 3)"), threes, 1},
                   symbol("gamma1", "γ1", "(1 2)(3 4)", s4_class("(1 2)(3 4)"))};
      m.curves = {{"W", "TRIVIAL"},
                  {"C", "T2x2(1 2)(3 4)"},
                  {"Y", "C3(2 3 4)"},
                  {"U", "KLEIN_NORMAL"},
                  {"Delta", "A4"}};
      break;
    }
    case GroupKind::Sym4:
      m.group = &subgroup_by_name("S4");
      m.symbols = {symbol("alpha", "α", "(1 2)", s4_class("(1 2)")),
                   symbol("beta", "β", "(1 2 3)", s4_class("(1 2 3)")),
                   symbol("gamma", "γ", "(1 2)(3 4)", s4_class("(1 2)(3 4)")),
                   symbol("delta", "δ", "(1 2 3 4)", s4_class("(1 2 3 4)"))};
      m.curves = {{"W", "TRIVIAL"},      {"C", "T2x2(1 2)(3 4)"}, {"Z", "T2(3 4)"},
                  {"Y", "C3(2 3 4)"},    {"U", "KLEIN_NORMAL"},    {"S", "KLEIN(2)"},
                  {"V", "C4(1 3 2 4)"},  {"X", "S3(1)"},           {"R", "D4(2)"},
                  {"Delta", "A4"},       {"T", "S4"}};
      break;
    case GroupKind::Sym3:
      m.group = &subgroup_by_name("S3(4)");
      m.symbols = {symbol("alpha", "α", "(1 2 3)", set_of({"(1 2 3)", "(1 3 2)"})),
                   symbol("beta", "β", "(1 2)", set_of({"(1 2)", "(1 3)", "(2 3)"}))};
      m.curves = {{"W", "TRIVIAL"}, {"Y", "C3(1 2 3)"}, {"Z", "T2(1 2)"}, {"X", "S3(4)"}};
      break;
  }
  return m;
}

}  // namespace

std::string_view kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic4: return "CYCLIC4";
    case GroupKind::Klein: return "KLEIN";
    case GroupKind::Dihedral8: return "DIHEDRAL8";
    case GroupKind::Alt4: return "ALT4";
    case GroupKind::Sym4: return "SYM4";
    case GroupKind::Sym3: return "SYM3";
  }
  return "?";
}

GroupKind parse_kind(std::string_view name) {
  for (GroupKind k : all_kinds())
    if (kind_name(k) == name) return k;
  throw Error(ErrorKind::Schema, "unknown group: " + std::string(name));
}

int group_order(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic4: return 4;
    case GroupKind::Klein: return 4;
    case GroupKind::Dihedral8: return 8;
    case GroupKind::Alt4: return 12;
    case GroupKind::Sym4: return 24;
    case GroupKind::Sym3: return 6;
  }
  return 0;
}

const std::vector<GroupKind>& all_kinds() {
  static const std::vector<GroupKind> kinds{GroupKind::Cyclic4, GroupKind::Klein,
                                            GroupKind::Dihedral8, GroupKind::Alt4,
                                            GroupKind::Sym4, GroupKind::Sym3};
  return kinds;
}

const BranchSymbol& GroupModel::symbol(std::string_view name) const {
  return symbols[symbol_index(name)];
}

std::size_t GroupModel::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return i;
  throw Error(ErrorKind::Schema,
              "symbol '" + std::string(name) + "' is not used by " + std::string(kind_name(kind)));
}

const CurveSpec& GroupModel::curve(std::string_view name) const {
  for (const CurveSpec& c : curves)
    if (c.name == name) return c;
  throw Error(ErrorKind::Catalog,
              "curve '" + std::string(name) + "' is not defined for " + std::string(kind_name(kind)));
}

const Subgroup& GroupModel::curve_subgroup(std::string_view name) const {
  return subgroup_by_name(curve(name).subgroup);
}

const GroupModel& group_model(GroupKind kind) {
  static const std::vector<GroupModel> models = [] {
    std::vector<GroupModel> v;
    for (GroupKind k : all_kinds()) v.push_back(build(k));
    return v;
  }();
  return models[static_cast<std::size_t>(kind)];
}

RamificationProfile::RamificationProfile(GroupKind kind, int base_genus,
                                         const std::map<std::string, int>& counts)
    : kind_(kind), g_(base_genus), counts_(group_model(kind).symbols.size(), 0) {
  if (base_genus < 0) throw Error(ErrorKind::Schema, "base genus must be nonnegative");
  const GroupModel& m = group_model(kind);
  for (const auto& [name, value] : counts) {
    std::size_t i = m.symbol_index(name);
    if (value < 0) throw Error(ErrorKind::Schema, "count '" + name + "' must be nonnegative");
    counts_[i] = value;
  }
}

int RamificationProfile::count(std::string_view symbol) const {
  return counts_[model().symbol_index(symbol)];
}

int RamificationProfile::points_at(std::size_t index) const {
  int units = model().symbols[index].units_per_point;
  if (counts_[index] % units != 0) {
    throw Error(ErrorKind::Parity, model().symbols[index].name + " must be divisible by " +
                                       std::to_string(units));
  }
  return counts_[index] / units;
}

int RamificationProfile::gamma_half() const {
  if (kind_ != GroupKind::Cyclic4) throw Error(ErrorKind::Schema, "gamma_half is cyclic only");
  return points_at(0);
}

std::map<std::string, int> RamificationProfile::counts() const {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) out[model().symbols[i].name] = counts_[i];
  return out;
}

std::string RamificationProfile::to_string() const {
  std::ostringstream os;
  os << kind_name(kind_) << " g=" << g_;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    os << ' ' << model().symbols[i].name << '=' << counts_[i];
  return os.str();
}

std::vector<Violation> validate(const RamificationProfile& p) {
  std::vector<Violation> out;
  auto parity = [&](int value, const char* rule) {
    if (value % 2 != 0) out.push_back({Violation::Type::Parity, rule});
  };
  auto atleast = [&](int value, int bound, const char* rule) {
    if (p.base_genus() == 0 && value < bound) out.push_back({Violation::Type::Connectivity, rule});
  };
  auto c = [&](const char* s) { return p.count(s); };
  switch (p.kind()) {
    case GroupKind::Cyclic4:
      parity(c("gamma"), "gamma = 0 mod 2");
      parity(c("delta"), "delta = 0 mod 2");
      atleast(c("delta"), 2, "delta >= 2");
      break;
    case GroupKind::Klein:
      // The branch product s sigma + t tau + r sigma tau must vanish, so r, s
      // and t share one parity.
      parity(c("r") + c("s"), "r+s = 0 mod 2");
      parity(c("r") + c("t"), "r+t = 0 mod 2");
      parity(c("s") + c("t"), "s+t = 0 mod 2");
      atleast(c("r") + c("s"), 2, "r+s >= 2");
      atleast(c("r") + c("t"), 2, "r+t >= 2");
      atleast(c("s") + c("t"), 2, "s+t >= 2");
      break;
    case GroupKind::Dihedral8:
      parity(c("gamma1") + c("delta"), "gamma1+delta = 0 mod 2");
      parity(c("alpha") + c("delta"), "alpha+delta = 0 mod 2");
      parity(c("alpha") + c("gamma1"), "alpha+gamma1 = 0 mod 2");
      atleast(c("gamma1") + c("delta"), 2, "gamma1+delta >= 2");
      atleast(c("alpha") + c("delta"), 2, "alpha+delta >= 2");
      atleast(c("alpha") + c("gamma1"), 2, "alpha+gamma1 >= 2");
      break;
    case GroupKind::Alt4:
      atleast(c("beta"), 2, "beta >= 2");
      atleast(c("beta") + c("gamma1"), 3, "beta+gamma1 >= 3");
      break;
    case GroupKind::Sym4:
      parity(c("alpha") + c("delta"), "alpha+delta = 0 mod 2");
      atleast(c("alpha") + c("delta"), 2, "alpha+delta >= 2");
      atleast(c("beta"), 1, "beta >= 1");
      atleast(c("gamma") + c("delta"), 1, "gamma+delta >= 1");
      break;
    case GroupKind::Sym3:
      parity(c("beta"), "beta = 0 mod 2");
      atleast(c("beta"), 2, "beta >= 2");
      atleast(2 * c("alpha") + c("beta"), 4, "2alpha+beta >= 4");
      break;
  }
  return out;
}

bool parity_valid(const RamificationProfile& profile) {
  for (const Violation& v : validate(profile))
    if (v.type == Violation::Type::Parity) return false;
  return true;
}

std::string SignatureType::to_string() const {
  std::ostringstream os;
  os << '(' << genus << ';';
  if (periods.empty()) os << " -";
  for (std::size_t i = 0; i < periods.size(); ++i) os << (i ? ", " : " ") << periods[i];
  os << ')';
  return os.str();
}

SignatureType signature(const RamificationProfile& profile) {
  if (!parity_valid(profile)) {
    throw Error(ErrorKind::Parity, "profile violates parity: " + profile.to_string());
  }
  SignatureType sig{profile.base_genus(), {}};
  const GroupModel& m = profile.model();
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    int period = m.symbols[i].representative.order();
    for (int k = 0; k < profile.points_at(i); ++k) sig.periods.push_back(period);
  }
  return sig;
}

int branch_count(const RamificationProfile& profile) {
  int total = 0;
  const GroupModel& m = profile.model();
  for (std::size_t i = 0; i < m.symbols.size(); ++i)
    total += profile.count_at(i) / m.symbols[i].units_per_point;
  return total;
}

}  // namespace fourfold
