#include "fourfold/genus.hpp"

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

void require_parity(const RamificationProfile& profile) {
  if (!parity_valid(profile)) {
    throw Error(ErrorKind::Parity, "profile violates parity: " + profile.to_string());
  }
}

// 2g - 2 of W/H.
long long euler_twice(const RamificationProfile& profile, const Subgroup& h) {
  const GroupModel& m = profile.model();
  const Subgroup& g = *m.group;
  if (!g.contains(h)) {
    throw Error(ErrorKind::Containment, h.name + " is not a subgroup of " + g.name);
  }
  long long index = g.order() / h.order();
  long long total = index * (2LL * profile.base_genus() - 2);
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    int pts = profile.points_at(i);
    if (pts == 0) continue;
    long long defect = 0;
    for (const CosetOrbit& o : coset_orbits(g, h, m.symbols[i].representative)) defect += o.length - 1;
    total += pts * defect;
  }
  return total;
}

int genus_from_euler(long long twice, const std::string& where) {
  if (twice % 2 != 0) throw Error(ErrorKind::Parity, "fractional genus for " + where);
  long long genus = twice / 2 + 1;
  if (genus < 0) throw Error(ErrorKind::Internal, "negative genus for " + where);
  return static_cast<int>(genus);
}

}  // namespace

int GenusTable::genus(std::string_view curve) const {
  for (const Entry& e : genera)
    if (e.curve == curve) return e.genus;
  throw Error(ErrorKind::Catalog, "no curve named " + std::string(curve));
}

int GenusTable::ram(std::string_view from, std::string_view to) const {
  for (const Arrow& a : arrows)
    if (a.from == from && a.to == to) return a.ram;
  throw Error(ErrorKind::Containment, "no cover " + std::string(from) + " -> " + std::string(to));
}

int genus_top(const RamificationProfile& profile) {
  return genus_quotient(profile, subgroup_by_name("TRIVIAL"));
}

int genus_quotient(const RamificationProfile& profile, const Subgroup& h) {
  require_parity(profile);
  return genus_from_euler(euler_twice(profile, h), "W/" + h.name);
}

int genus_of(const RamificationProfile& profile, std::string_view curve) {
  return genus_quotient(profile, profile.model().curve_subgroup(curve));
}

int ram_degree(const RamificationProfile& profile, const Subgroup& h, const Subgroup& k) {
  require_parity(profile);
  if (!k.contains(h)) {
    throw Error(ErrorKind::Containment, h.name + " is not contained in " + k.name);
  }
  long long eh = euler_twice(profile, h);
  long long ek = euler_twice(profile, k);
  return static_cast<int>(eh - static_cast<long long>(k.order() / h.order()) * ek);
}

int ram_degree(const RamificationProfile& profile, std::string_view from, std::string_view to) {
  const GroupModel& m = profile.model();
  return ram_degree(profile, m.curve_subgroup(from), m.curve_subgroup(to));
}

int fixed_points(const RamificationProfile& profile, const Perm& h) {
  require_parity(profile);
  const GroupModel& m = profile.model();
  if (h.is_identity()) throw Error(ErrorKind::Domain, "fixed points of the identity are not counted");
  if (!m.group->contains(h)) {
    throw Error(ErrorKind::Containment, h.to_string() + " is not in " + m.group->name);
  }
  int total = 0;
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    int pts = profile.points_at(i);
    if (pts == 0) continue;
    const Perm& c = m.symbols[i].representative;
    PermSet cyclic = closure(to_set({c}));
    int hits = 0;
    for (const Perm& x : to_vector(m.group->elements))
      if (cyclic.test(conjugate(x.inverse(), h).index())) ++hits;
    total += pts * (hits / static_cast<int>(cyclic.count()));
  }
  return total;
}

GenusTable genus_table(const RamificationProfile& profile) {
  require_parity(profile);
  const GroupModel& m = profile.model();
  GenusTable t;
  std::vector<long long> euler;
  for (const CurveSpec& c : m.curves) {
    const Subgroup& h = subgroup_by_name(c.subgroup);
    euler.push_back(euler_twice(profile, h));
    t.genera.push_back({c.name, c.subgroup, genus_from_euler(euler.back(), c.name)});
  }
  for (std::size_t i = 0; i < m.curves.size(); ++i) {
    const Subgroup& h = subgroup_by_name(m.curves[i].subgroup);
    for (std::size_t j = 0; j < m.curves.size(); ++j) {
      const Subgroup& k = subgroup_by_name(m.curves[j].subgroup);
      if (i == j || !k.contains(h) || h.order() == k.order()) continue;
      int deg = k.order() / h.order();
      int ram = static_cast<int>(euler[i] - deg * euler[j]);
      t.arrows.push_back({m.curves[i].name, m.curves[j].name, deg, ram});
    }
  }
  t.top_genus = t.genera.front().genus;
  t.base_genus = t.genera.back().genus;
  return t;
}

RamificationProfile restrict_profile(const RamificationProfile& profile, const Subgroup& h,
                                     GroupKind target) {
  require_parity(profile);
  const GroupModel& m = profile.model();
  const GroupModel& tm = group_model(target);
  if (tm.group->elements != h.elements) {
    throw Error(ErrorKind::Schema, h.name + " is not the embedding used for " +
                                       std::string(kind_name(target)));
  }
  std::vector<int> counts(tm.symbols.size(), 0);
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    int pts = profile.points_at(i);
    if (pts == 0) continue;
    const Perm& c = m.symbols[i].representative;
    for (const CosetOrbit& o : coset_orbits(*m.group, h, c)) {
      Perm local = conjugate(o.representative.inverse(), power(c, o.length));
      if (local.is_identity()) continue;
      bool placed = false;
      for (std::size_t j = 0; j < tm.symbols.size() && !placed; ++j) {
        if (tm.symbols[j].candidates.test(local.index())) {
          counts[j] += pts * tm.symbols[j].units_per_point;
          placed = true;
        }
      }
      if (!placed) throw Error(ErrorKind::Internal, "unclassified local monodromy " + local.to_string());
    }
  }
  std::map<std::string, int> named;
  for (std::size_t j = 0; j < tm.symbols.size(); ++j) named[tm.symbols[j].name] = counts[j];
  return RamificationProfile(target, genus_quotient(profile, h), named);
}

std::map<int, int> quotient_branching(const RamificationProfile& profile, const Subgroup& n) {
  require_parity(profile);
  const GroupModel& m = profile.model();
  if (!is_normal_in(n, *m.group)) {
    throw Error(ErrorKind::Containment, n.name + " is not normal in " + m.group->name);
  }
  std::map<int, int> out;
  for (std::size_t i = 0; i < m.symbols.size(); ++i) {
    int pts = profile.points_at(i);
    if (pts == 0) continue;
    const Perm& c = m.symbols[i].representative;
    int k = 1;
    while (!n.contains(power(c, k))) ++k;
    out[k] += pts;
  }
  return out;
}

}  // namespace fourfold
