#include "fourfold/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

// Index-level set product {x*y : x in a, y in b}.
PermSet set_product(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (int x = 0; x < 24; ++x) {
    if (!a.test(x)) continue;
    for (int y = 0; y < 24; ++y)
      if (b.test(y)) out.set(mul_index(x, y));
  }
  return out;
}

PermSet set_inverse(const PermSet& a) {
  PermSet out;
  for (int x = 0; x < 24; ++x)
    if (a.test(x)) out.set(inv_index(x));
  return out;
}

int commutator_index(int a, int b) {
  return mul_index(mul_index(a, b), mul_index(inv_index(a), inv_index(b)));
}

PermSet class_in_s4(const Perm& p) {
  PermSet out;
  for (const Perm& q : all_perms())
    if (q.cycle_class() == p.cycle_class()) out.set(q.index());
  return out;
}

SubgroupFamily family_of(GroupKind kind) { return group_model(kind).group->family; }

bool image_matches(const PermSet& image, GroupKind kind, SearchMode mode) {
  const Subgroup& target = *group_model(kind).group;
  if (mode == SearchMode::GaloisImage) return image == target.elements;
  return subgroup_with_elements(image).family == family_of(kind);
}

struct Entry {
  std::size_t symbol;
  PermSet candidates;
};

// Shared state of one search.
struct Plan {
  const RamificationProfile* profile;
  SearchMode mode;
  int g;
  std::vector<Entry> entries;
  PermSet handle_group;
  std::vector<PermSet> comm;  // comm[k]: products of k commutators
  std::vector<PermSet> need;  // need[k]: admissible prefixes after k entries
  std::array<std::vector<std::pair<int, int>>, 24> comm_pairs;
  std::uint64_t budget;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> max_depth{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::mutex witness_mutex;
  std::optional<HurwitzTuple> witness;
};

class Worker {
 public:
  explicit Worker(Plan& plan) : p_(plan), branch_(plan.entries.size()), handles_(plan.g) {}

  // Explores every completion of a fixed prefix of branch entries.
  void run_prefix(const std::vector<int>& prefix) {
    int product = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      branch_[k] = prefix[k];
      product = mul_index(product, prefix[k]);
    }
    dfs(prefix.size(), product);
  }

 private:
  bool tick() {
    if (p_.stop.load(std::memory_order_relaxed)) return false;
    if (p_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > p_.budget) {
      p_.budget_hit = true;
      p_.stop = true;
      return false;
    }
    return true;
  }

  void note_depth(int depth) {
    int cur = p_.max_depth.load(std::memory_order_relaxed);
    while (depth > cur && !p_.max_depth.compare_exchange_weak(cur, depth)) {
    }
  }

  void dfs(std::size_t k, int product) {
    if (p_.stop.load(std::memory_order_relaxed)) return;
    if (k == p_.entries.size()) {
      branch_gens_ = PermSet();
      for (int x : branch_) branch_gens_.set(x);
      handles_for(0, product, branch_gens_);
      return;
    }
    const PermSet& cand = p_.entries[k].candidates;
    for (int x = 0; x < 24; ++x) {
      if (!cand.test(x)) continue;
      int next = mul_index(product, x);
      if (!p_.need[k + 1].test(next)) continue;
      if (!tick()) return;
      note_depth(static_cast<int>(k + 1));
      branch_[k] = x;
      dfs(k + 1, next);
      if (p_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  // Chooses handles i.. so that their commutator product equals `rest`.
  void handles_for(int i, int rest, const PermSet& gens) {
    if (i == p_.g) {
      if (rest != 0) return;
      if (image_matches(closure(gens), p_.profile->kind(), p_.mode)) publish();
      return;
    }
    if (i == p_.g - 1) {
      for (auto [a, b] : p_.comm_pairs[rest]) {
        if (!tick()) return;
        handles_[i] = {a, b};
        PermSet next = gens;
        next.set(a);
        next.set(b);
        handles_for(i + 1, 0, next);
        if (p_.stop.load(std::memory_order_relaxed)) return;
      }
      return;
    }
    for (int a = 0; a < 24; ++a) {
      if (!p_.handle_group.test(a)) continue;
      for (int b = 0; b < 24; ++b) {
        if (!p_.handle_group.test(b)) continue;
        int c = commutator_index(a, b);
        int remaining = mul_index(inv_index(c), rest);
        if (!p_.comm[p_.g - i - 1].test(remaining)) continue;
        if (!tick()) return;
        handles_[i] = {a, b};
        PermSet next = gens;
        next.set(a);
        next.set(b);
        handles_for(i + 1, remaining, next);
        if (p_.stop.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void publish() {
    std::lock_guard lock(p_.witness_mutex);
    if (p_.witness) return;
    HurwitzTuple t;
    t.base_genus = p_.g;
    for (auto [a, b] : handles_) t.handles.emplace_back(Perm::from_index(a), Perm::from_index(b));
    const GroupModel& m = p_.profile->model();
    for (std::size_t k = 0; k < branch_.size(); ++k) {
      t.branch.push_back(Perm::from_index(branch_[k]));
      t.labels.push_back(m.symbols[p_.entries[k].symbol].name);
    }
    p_.witness = std::move(t);
    p_.stop = true;
  }

  Plan& p_;
  std::vector<int> branch_;
  std::vector<std::pair<int, int>> handles_;
  PermSet branch_gens_;
};

// Representatives of the conjugation orbits of `group` on `set`.
std::vector<int> orbit_representatives(const PermSet& set, const PermSet& group) {
  std::vector<int> reps;
  PermSet seen;
  for (int x = 0; x < 24; ++x) {
    if (!set.test(x) || seen.test(x)) continue;
    reps.push_back(x);
    seen |= conjugacy_class_in(Perm::from_index(x), group) & set;
  }
  return reps;
}

}  // namespace

std::string_view mode_name(SearchMode mode) {
  return mode == SearchMode::GaloisImage ? "GALOIS_IMAGE" : "TRANSITIVE_IMAGE";
}

SearchMode parse_mode(std::string_view name) {
  if (name == "GALOIS_IMAGE" || name == "galois") return SearchMode::GaloisImage;
  if (name == "TRANSITIVE_IMAGE" || name == "transitive") return SearchMode::TransitiveImage;
  throw Error(ErrorKind::Schema, "unknown search mode " + std::string(name));
}

std::string_view status_name(SearchOutcome::Status status) {
  switch (status) {
    case SearchOutcome::Status::Witness: return "WITNESS";
    case SearchOutcome::Status::ExhaustedNone: return "EXHAUSTED_NONE";
    case SearchOutcome::Status::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

Perm handle_product(const HurwitzTuple& t) {
  Perm out;
  for (const auto& [a, b] : t.handles) out = out * commutator(a, b);
  return out;
}

Perm branch_product(const HurwitzTuple& t) {
  Perm out;
  for (const Perm& s : t.branch) out = out * s;
  return out;
}

PermSet generated_group(const HurwitzTuple& t) {
  std::vector<Perm> gens(t.branch);
  for (const auto& [a, b] : t.handles) {
    gens.push_back(a);
    gens.push_back(b);
  }
  return closure(to_set(gens));
}

std::string classify_group(const PermSet& group) {
  if (!is_transitive(group)) return "INTRANSITIVE";
  switch (subgroup_with_elements(group).family) {
    case SubgroupFamily::C4: return "CYCLIC4";
    case SubgroupFamily::KleinNormal: return "KLEIN";
    case SubgroupFamily::D4: return "DIHEDRAL8";
    case SubgroupFamily::A4: return "ALT4";
    case SubgroupFamily::S4: return "SYM4";
    default: break;
  }
  throw Error(ErrorKind::Internal, "transitive subgroup outside the known families");
}

std::string classify_image(const HurwitzTuple& tuple) { return classify_group(generated_group(tuple)); }

VerifyResult verify_tuple(const HurwitzTuple& t, const RamificationProfile& profile, SearchMode mode) {
  const GroupModel& m = profile.model();
  const int omega = branch_count(profile);
  if (static_cast<int>(t.handles.size()) != profile.base_genus() ||
      static_cast<int>(t.branch.size()) != omega) {
    throw Error(ErrorKind::Schema, "tuple has " + std::to_string(t.handles.size()) + " handles and " +
                                       std::to_string(t.branch.size()) + " branch entries; profile needs " +
                                       std::to_string(profile.base_genus()) + " and " +
                                       std::to_string(omega));
  }
  if (!t.labels.empty() && t.labels.size() != t.branch.size()) {
    throw Error(ErrorKind::Schema, "label count differs from branch entry count");
  }
  VerifyResult r;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    const BranchSymbol& sym = m.symbols[i];
    PermSet allowed = mode == SearchMode::GaloisImage ? sym.candidates : class_in_s4(sym.representative);
    for (int k = 0; k < profile.points_at(i); ++k, ++pos) {
      const Perm& s = t.branch[pos];
      if (!t.labels.empty() && t.labels[pos] != sym.name) {
        r.diagnostics.push_back("entry " + std::to_string(pos + 1) + " is labelled " + t.labels[pos] +
                                ", expected " + sym.name);
      }
      if (!allowed.test(s.index())) {
        r.diagnostics.push_back("entry " + std::to_string(pos + 1) + " = " + s.to_string() +
                                " is not an admissible " + sym.name + " element");
      }
    }
  }
  if (mode == SearchMode::GaloisImage) {
    for (const auto& [a, b] : t.handles) {
      if (!m.group->contains(a) || !m.group->contains(b)) {
        r.diagnostics.push_back("handle " + a.to_string() + ", " + b.to_string() + " leaves " + m.group->name);
      }
    }
  }
  Perm lhs = handle_product(t);
  Perm rhs = branch_product(t);
  if (lhs != rhs) {
    r.diagnostics.push_back("relation fails: commutator product " + lhs.to_string() +
                            " differs from branch product " + rhs.to_string());
  }
  PermSet image = generated_group(t);
  if (!image_matches(image, profile.kind(), mode)) {
    r.diagnostics.push_back("generated group " + subgroup_with_elements(image).name + " does not match " +
                            std::string(kind_name(profile.kind())));
  }
  r.ok = r.diagnostics.empty();
  return r;
}

SearchOutcome search(const RamificationProfile& profile, const SearchOptions& options) {
  const GroupModel& m = profile.model();
  Plan plan;
  plan.profile = &profile;
  plan.mode = options.mode;
  plan.g = profile.base_genus();
  plan.budget = options.budget;
  plan.handle_group =
      options.mode == SearchMode::GaloisImage ? m.group->elements : subgroup_by_name("S4").elements;

  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    const BranchSymbol& sym = m.symbols[i];
    PermSet cand = options.mode == SearchMode::GaloisImage ? sym.candidates : class_in_s4(sym.representative);
    for (int k = 0; k < profile.points_at(i); ++k) plan.entries.push_back({i, cand});
  }

  PermSet single;
  for (int a = 0; a < 24; ++a) {
    if (!plan.handle_group.test(a)) continue;
    for (int b = 0; b < 24; ++b) {
      if (!plan.handle_group.test(b)) continue;
      int c = commutator_index(a, b);
      single.set(c);
      plan.comm_pairs[c].emplace_back(a, b);
    }
  }
  plan.comm.push_back(PermSet().set(0));
  for (int k = 1; k <= plan.g; ++k) plan.comm.push_back(set_product(plan.comm.back(), single));

  const std::size_t n = plan.entries.size();
  std::vector<PermSet> reach(n + 1);
  reach[n].set(0);
  for (std::size_t k = n; k-- > 0;) reach[k] = set_product(plan.entries[k].candidates, reach[k + 1]);
  plan.need.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) plan.need[k] = set_product(plan.comm[plan.g], set_inverse(reach[k]));

  SearchOutcome out;
  if (!plan.need[0].test(0)) return out;  // no product can close up: nothing explored

  // Work items: admissible prefixes of length up to two, first entry reduced
  // to conjugation-orbit representatives.
  std::vector<std::vector<int>> items;
  if (n == 0) {
    items.push_back({});
  } else {
    for (int x : orbit_representatives(plan.entries[0].candidates, plan.handle_group)) {
      if (!plan.need[1].test(x)) continue;
      if (n == 1 || options.threads <= 1) {
        items.push_back({x});
        continue;
      }
      for (int y = 0; y < 24; ++y)
        if (plan.entries[1].candidates.test(y) && plan.need[2].test(mul_index(x, y))) items.push_back({x, y});
    }
  }
  for (const auto& item : items) {
    plan.nodes += item.size();
    plan.max_depth = std::max<int>(plan.max_depth, static_cast<int>(item.size()));
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Worker w(plan);
    for (std::size_t i = next++; i < items.size() && !plan.stop; i = next++) w.run_prefix(items[i]);
  };
  int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(items.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  out.nodes_explored = plan.nodes;
  out.max_depth = plan.max_depth;
  if (plan.witness) {
    out.status = SearchOutcome::Status::Witness;
    out.witness = std::move(plan.witness);
  } else if (plan.budget_hit) {
    out.status = SearchOutcome::Status::BudgetExceeded;
  }
  return out;
}

int moduli_dim(const RamificationProfile& profile) {
  int g = profile.base_genus();
  int omega = branch_count(profile);
  if ((g == 0 && omega < 3) || (g == 1 && omega == 0)) {
    throw Error(ErrorKind::Domain, "degenerate stratum: g=" + std::to_string(g) +
                                       " with " + std::to_string(omega) + " branch points");
  }
  return 3 * g - 3 + omega;
}

std::vector<std::pair<std::string, std::string>> serialize(const HurwitzTuple& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < t.handles.size(); ++i) {
    out.emplace_back("a" + std::to_string(i + 1), t.handles[i].first.to_string());
    out.emplace_back("b" + std::to_string(i + 1), t.handles[i].second.to_string());
  }
  for (std::size_t k = 0; k < t.branch.size(); ++k) {
    out.emplace_back(t.labels.empty() ? "sigma" : t.labels[k], t.branch[k].to_string());
  }
  return out;
}

HurwitzTuple deserialize(int base_genus, const std::vector<std::pair<std::string, std::string>>& entries) {
  HurwitzTuple t;
  t.base_genus = base_genus;
  std::vector<std::optional<Perm>> a(base_genus), b(base_genus);
  bool unlabelled = false;
  for (const auto& [label, text] : entries) {
    Perm p = Perm::parse(text);
    bool handle = label.size() > 1 && (label[0] == 'a' || label[0] == 'b') &&
                  std::all_of(label.begin() + 1, label.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (handle) {
      int i = std::stoi(label.substr(1)) - 1;
      if (i < 0 || i >= base_genus) throw Error(ErrorKind::Schema, "handle label out of range: " + label);
      (label[0] == 'a' ? a : b)[i] = p;
      continue;
    }
    t.branch.push_back(p);
    t.labels.push_back(label);
    unlabelled = unlabelled || label == "sigma";
  }
  for (int i = 0; i < base_genus; ++i) {
    if (!a[i] || !b[i]) throw Error(ErrorKind::Schema, "missing handle pair " + std::to_string(i + 1));
    t.handles.emplace_back(*a[i], *b[i]);
  }
  if (unlabelled) t.labels.clear();
  return t;
}

}  // namespace fourfold
