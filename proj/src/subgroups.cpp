#include "fourfold/subgroups.hpp"

#include <algorithm>
#include <array>

#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

Perm P(const char* text) { return Perm::parse(text); }

Subgroup make(std::string name, SubgroupFamily family, std::vector<Perm> gens) {
  return Subgroup{std::move(name), family, closure(to_set(gens))};
}

std::vector<Subgroup> build_catalog() {
  std::vector<Subgroup> cat;
  cat.push_back(make("TRIVIAL", SubgroupFamily::Trivial, {}));

  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      std::array<int, 4> img{1, 2, 3, 4};
      std::swap(img[a - 1], img[b - 1]);
      Perm t = Perm::from_images(img);
      cat.push_back(make("T2" + t.to_string(), SubgroupFamily::T2, {t}));
    }

  for (const char* dt : {"(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"}) {
    cat.push_back(make(std::string("T2x2") + dt, SubgroupFamily::T2x2, {P(dt)}));
  }

  for (const char* c : {"(2 3 4)", "(1 3 4)", "(1 2 4)", "(1 2 3)"}) {
    cat.push_back(make(std::string("C3") + c, SubgroupFamily::C3, {P(c)}));
  }

  // C4(1 k j l) and D4(j): j is the partner of 1 in the square (1 j)(k l).
  const std::array<std::array<int, 3>, 3> jkl{{{2, 3, 4}, {3, 2, 4}, {4, 2, 3}}};
  for (const auto& [j, k, l] : jkl) {
    std::string r = "(1 " + std::to_string(k) + " " + std::to_string(j) + " " + std::to_string(l) + ")";
    cat.push_back(make("C4" + r, SubgroupFamily::C4, {P(r.c_str())}));
  }

  cat.push_back(make("KLEIN_NORMAL", SubgroupFamily::KleinNormal,
                     {P("(1 2)(3 4)"), P("(1 3)(2 4)")}));
  for (const auto& [j, k, l] : jkl) {
    std::string sigma = "(1 " + std::to_string(j) + ")(" + std::to_string(k) + " " + std::to_string(l) + ")";
    std::string kl = "(" + std::to_string(k) + " " + std::to_string(l) + ")";
    cat.push_back(make("KLEIN(" + std::to_string(j) + ")", SubgroupFamily::Klein,
                       {P(sigma.c_str()), P(kl.c_str())}));
  }

  for (int n = 1; n <= 4; ++n) {
    std::vector<Perm> gens;
    for (const Perm& p : all_perms())
      if (p(n) == n) gens.push_back(p);
    cat.push_back(make("S3(" + std::to_string(n) + ")", SubgroupFamily::S3, gens));
  }

  for (const auto& [j, k, l] : jkl) {
    std::string r = "(1 " + std::to_string(k) + " " + std::to_string(j) + " " + std::to_string(l) + ")";
    std::string kl = "(" + std::to_string(k) + " " + std::to_string(l) + ")";
    cat.push_back(make("D4(" + std::to_string(j) + ")", SubgroupFamily::D4,
                       {P(r.c_str()), P(kl.c_str())}));
  }

  std::vector<Perm> even;
  for (const Perm& p : all_perms())
    if (p.sign() == 1) even.push_back(p);
  cat.push_back(make("A4", SubgroupFamily::A4, even));
  cat.push_back(make("S4", SubgroupFamily::S4, {P("(1 2)"), P("(1 2 3 4)")}));

  std::stable_sort(cat.begin(), cat.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() < b.order();
  });
  return cat;
}

}  // namespace

const std::vector<Subgroup>& subgroup_catalog() {
  static const std::vector<Subgroup> cat = build_catalog();
  return cat;
}

const Subgroup& subgroup_by_name(const std::string& name) {
  for (const Subgroup& s : subgroup_catalog())
    if (s.name == name) return s;
  throw Error(ErrorKind::Catalog, "unknown subgroup: " + name);
}

std::vector<Perm> subgroup_elements(const std::string& name) {
  return to_vector(subgroup_by_name(name).elements);
}

const Subgroup& subgroup_with_elements(const PermSet& elements) {
  for (const Subgroup& s : subgroup_catalog())
    if (s.elements == elements) return s;
  throw Error(ErrorKind::Internal, "element set is not a subgroup of S4");
}

const Subgroup& subgroup_generated_by(const std::vector<Perm>& generators) {
  return subgroup_with_elements(closure(to_set(generators)));
}

std::vector<CosetOrbit> coset_orbits(const Subgroup& g, const Subgroup& h, const Perm& c) {
  if (!g.contains(h)) {
    throw Error(ErrorKind::Containment, h.name + " is not contained in " + g.name);
  }
  if (!g.contains(c)) {
    throw Error(ErrorKind::Containment, c.to_string() + " is not an element of " + g.name);
  }
  // Each left coset xH is labelled by its element mask.
  std::vector<PermSet> cosets;
  std::vector<Perm> reps;
  for (const Perm& x : to_vector(g.elements)) {
    PermSet coset;
    for (const Perm& y : to_vector(h.elements)) coset.set((x * y).index());
    if (std::find(cosets.begin(), cosets.end(), coset) == cosets.end()) {
      cosets.push_back(coset);
      reps.push_back(x);
    }
  }
  auto coset_of = [&](const Perm& x) {
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (cosets[i].test(x.index())) return i;
    throw Error(ErrorKind::Internal, "coset lookup failed");
  };
  std::vector<bool> seen(cosets.size(), false);
  std::vector<CosetOrbit> orbits;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    Perm x = reps[i];
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      x = c * x;
      j = coset_of(x);
    }
    orbits.push_back({len, reps[i]});
  }
  return orbits;
}

std::vector<int> coset_cycle_type(const Subgroup& g, const Subgroup& h, const Perm& c) {
  std::vector<int> lens;
  for (const CosetOrbit& o : coset_orbits(g, h, c)) lens.push_back(o.length);
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

bool is_normal_in(const Subgroup& n, const Subgroup& g) {
  if (!g.contains(n)) return false;
  for (const Perm& x : to_vector(g.elements))
    for (const Perm& y : to_vector(n.elements))
      if (!n.contains(conjugate(x, y))) return false;
  return true;
}

bool is_transitive(const PermSet& group) {
  std::array<bool, 4> reach{};
  for (const Perm& p : to_vector(group)) reach[p(1) - 1] = true;
  return reach[0] && reach[1] && reach[2] && reach[3];
}

}  // namespace fourfold
