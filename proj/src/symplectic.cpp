#include "fourfold/symplectic.hpp"

#include <algorithm>
#include <set>

#include "fourfold/errors.hpp"

namespace fourfold {

SympModule::SympModule(int g, int d) : g_(g), d_(d), size_(1) {
  if (d < 2 || d > 4) throw Error(ErrorKind::Domain, "modulus must be 2, 3 or 4");
  if (g < 0) throw Error(ErrorKind::Domain, "genus must be nonnegative");
  for (int i = 0; i < 2 * g; ++i) {
    place_.push_back(size_);
    if (static_cast<std::uint64_t>(size_) * d > (1u << 20)) {
      throw Error(ErrorKind::Domain, "module (Z/" + std::to_string(d) + ")^" + std::to_string(2 * g) +
                                         " exceeds 2^20 elements");
    }
    size_ *= d;
  }
}

int SympModule::coord(Vec x, int i) const { return static_cast<int>((x / place_[i]) % d_); }

Vec SympModule::make(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != rank()) throw Error(ErrorKind::Domain, "wrong vector length");
  Vec x = 0;
  for (int i = 0; i < rank(); ++i) x += static_cast<Vec>(((coords[i] % d_) + d_) % d_) * place_[i];
  return x;
}

Vec SympModule::basis(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorKind::Domain, "basis index out of range");
  return place_[i];
}

Vec SympModule::add(Vec x, Vec y) const {
  if (d_ == 2) return x ^ y;
  Vec out = 0;
  for (int i = 0; i < rank(); ++i) out += static_cast<Vec>((coord(x, i) + coord(y, i)) % d_) * place_[i];
  return out;
}

Vec SympModule::neg(Vec x) const {
  if (d_ == 2) return x;
  Vec out = 0;
  for (int i = 0; i < rank(); ++i) out += static_cast<Vec>((d_ - coord(x, i)) % d_) * place_[i];
  return out;
}

int SympModule::form(Vec x, Vec y) const {
  int e = 0;
  for (int i = 0; i < g_; ++i) e += coord(x, i) * coord(y, g_ + i) - coord(x, g_ + i) * coord(y, i);
  return ((e % d_) + d_) % d_;
}

bool SubModule::contains(const SubModule& o) const {
  return std::all_of(o.elems_.begin(), o.elems_.end(), [&](Vec x) { return contains(x); });
}

SubModule span(const SympModule& m, const std::vector<Vec>& gens) {
  SubModule s;
  s.parent_ = &m;
  s.member_.assign(m.size(), 0);
  s.member_[0] = 1;
  s.elems_.push_back(0);
  for (Vec g : gens) {
    if (g >= m.size()) throw Error(ErrorKind::Domain, "vector outside the module");
    if (s.member_[g]) continue;
    s.gens_.push_back(g);
    // Closure under adding the new generator to everything found so far.
    for (std::size_t i = 0; i < s.elems_.size(); ++i) {
      Vec y = m.add(s.elems_[i], g);
      if (!s.member_[y]) {
        s.member_[y] = 1;
        s.elems_.push_back(y);
      }
    }
  }
  std::sort(s.elems_.begin(), s.elems_.end());
  return s;
}

SubModule from_elements(const SympModule& m, const std::vector<Vec>& elems) {
  SubModule s = span(m, elems);
  std::vector<Vec> sorted(elems);
  sorted.push_back(0);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != s.elems_) throw Error(ErrorKind::Domain, "element set is not a subgroup");
  return s;
}

SubModule sum(const SubModule& a, const SubModule& b) {
  std::vector<Vec> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return span(a.parent(), gens);
}

SubModule intersection(const SubModule& a, const SubModule& b) {
  std::vector<Vec> common;
  for (Vec x : a.elements())
    if (b.contains(x)) common.push_back(x);
  return from_elements(a.parent(), common);
}

SubModule orthogonal(const SubModule& s) {
  const SympModule& m = s.parent();
  std::vector<Vec> out;
  for (Vec x = 0; x < m.size(); ++x) {
    bool ok = std::all_of(s.generators().begin(), s.generators().end(),
                          [&](Vec g) { return m.form(x, g) == 0; });
    if (ok) out.push_back(x);
  }
  return from_elements(m, out);
}

bool is_isotropic(const SubModule& s) { return orthogonal(s).contains(s); }

std::uint64_t quotient_size(const SubModule& a, const SubModule& b) {
  if (!a.contains(b)) throw Error(ErrorKind::Domain, "quotient of a submodule by a non-subgroup");
  return a.size() / b.size();
}

CardinalityLaw cardinality_law_check(const SubModule& s) {
  CardinalityLaw law;
  law.size = s.size();
  law.perp_size = orthogonal(s).size();
  law.holds = law.size * law.perp_size == s.parent().size();
  if (!law.holds) {
    throw Error(ErrorKind::Internal, "|S| |S^perp| = " + std::to_string(law.size * law.perp_size) +
                                         " but the module has " + std::to_string(s.parent().size()) +
                                         " elements");
  }
  return law;
}

std::vector<SubModule> all_submodules(const SympModule& m) {
  if (m.size() > (1u << 12)) throw Error(ErrorKind::Domain, "exhaustive enumeration limited to 2^12 elements");
  std::vector<SubModule> out;
  std::set<std::vector<Vec>> seen;
  out.push_back(span(m, {}));
  seen.insert(out.back().elements());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vec x = 0; x < m.size(); ++x) {
      if (out[i].contains(x)) continue;
      std::vector<Vec> gens(out[i].generators());
      gens.push_back(x);
      SubModule next = span(m, gens);
      if (seen.insert(next.elements()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<SubModule> maximal_isotropic(const SympModule& m) {
  std::vector<SubModule> iso;
  for (SubModule& s : all_submodules(m))
    if (is_isotropic(s)) iso.push_back(std::move(s));
  std::vector<SubModule> out;
  for (const SubModule& s : iso) {
    bool maximal = std::none_of(iso.begin(), iso.end(), [&](const SubModule& o) {
      return o.size() > s.size() && o.contains(s);
    });
    if (maximal) out.push_back(s);
  }
  return out;
}

std::string_view case_name(KleinTorsionCase c) {
  switch (c) {
    case KleinTorsionCase::Ia: return "Ia";
    case KleinTorsionCase::Ib: return "Ib";
    case KleinTorsionCase::II: return "II";
    case KleinTorsionCase::III: return "III";
    case KleinTorsionCase::IVa: return "IVa";
    case KleinTorsionCase::IVb: return "IVb";
  }
  return "?";
}

KleinTorsionCase parse_case(std::string_view name) {
  for (KleinTorsionCase c : {KleinTorsionCase::Ia, KleinTorsionCase::Ib, KleinTorsionCase::II, KleinTorsionCase::III,
                         KleinTorsionCase::IVa, KleinTorsionCase::IVb})
    if (case_name(c) == name) return c;
  throw Error(ErrorKind::Schema, "unknown Klein 2-torsion case " + std::string(name));
}

int KleinTorsionModel::log2(std::string_view name) const {
  for (const KleinTorsionQuantity& q : quantities)
    if (q.name == name) return q.log2;
  throw Error(ErrorKind::Catalog, "no quantity " + std::string(name) + " in case " + std::string(case_name(which)));
}

namespace {

int log2_of(std::uint64_t n) {
  int k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  if ((std::uint64_t{1} << k) != n) throw Error(ErrorKind::Internal, "cardinality is not a power of two");
  return k;
}

const char* const kNames[3] = {"sigma", "tau", "sigmatau"};

void put(KleinTorsionModel& out, std::string name, int log2, bool from_model) {
  out.quantities.push_back({std::move(name), log2, from_model});
}

// ker phi_j = deg a_k* . deg a_l* . |a_k* P_k[2] cap a_l* P_l[2]|, where
// index 0, 1, 2 stand for sigma, tau, sigma tau.
void put_phi(KleinTorsionModel& out, const int deg[3], const int meet[3][3], bool from_model) {
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    put(out, std::string("ker phi_") + kNames[j], deg[k] + deg[l] + meet[k][l], from_model);
  }
}

void put_meets(KleinTorsionModel& out, const int meet[3][3], bool from_model) {
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      put(out, std::string("a_") + kNames[j] + " P cap a_" + kNames[k] + " P", meet[j][k], from_model);
}

}  // namespace

KleinTorsionModel klein_torsion_case_one(const SympModule& jt2, Vec eta_sigma, Vec eta_tau) {
  if (jt2.d() != 2) throw Error(ErrorKind::Domain, "the Klein configuration model lives in 2-torsion");
  if (eta_sigma == 0 || eta_tau == 0 || eta_sigma == eta_tau) {
    throw Error(ErrorKind::Domain, "eta_sigma and eta_tau must be distinct and nonzero");
  }
  const int g = jt2.g();
  KleinTorsionModel out;
  out.which = jt2.form(eta_sigma, eta_tau) == 0 ? KleinTorsionCase::Ia : KleinTorsionCase::Ib;
  out.g_T = g;

  const Vec etas[3] = {eta_sigma, eta_tau, jt2.add(eta_sigma, eta_tau)};
  SubModule h[3] = {span(jt2, {etas[0]}), span(jt2, {etas[1]}), span(jt2, {etas[2]})};
  SubModule k = span(jt2, {eta_sigma, eta_tau});  // ker gamma*
  SubModule whole = span(jt2, {});
  whole = orthogonal(whole);

  int p2[3], deg[3], meet[3][3] = {};
  SubModule perp_plus_k[3] = {whole, whole, whole};
  for (int j = 0; j < 3; ++j) {
    SubModule hp = orthogonal(h[j]);
    p2[j] = log2_of(quotient_size(hp, h[j]));  // P_j[2] = b_j*(H_j^perp)
    // ker a_j* restricted to P_j is b_j*(K cap H_j^perp).
    deg[j] = log2_of(quotient_size(intersection(k, hp), h[j]));
    perp_plus_k[j] = sum(hp, k);
  }
  for (int j = 0; j < 3; ++j)
    for (int l = j + 1; l < 3; ++l) {
      // a_j*(P_j[2]) = gamma*(H_j^perp) = (H_j^perp + K)/K
      meet[j][l] = meet[l][j] =
          log2_of(quotient_size(intersection(perp_plus_k[j], perp_plus_k[l]), k));
    }
  for (int j = 0; j < 3; ++j) put(out, std::string("P_") + kNames[j] + "[2]", p2[j], true);
  for (int j = 0; j < 3; ++j) put(out, std::string("deg a_") + kNames[j] + "* on P", deg[j], true);
  put_meets(out, meet, true);
  SubModule kk = orthogonal(k);
  if (kk.contains(k)) put(out, "(H_j+H_k)^perp/(H_j+H_k)", log2_of(quotient_size(kk, k)), true);
  put_phi(out, deg, meet, true);
  // ker a_j* = b_j*(K) lies in b_j*(JT), so the correction factor is 1.
  for (int j = 0; j < 3; ++j) put(out, std::string("ker spp_") + kNames[j], p2[j], true);
  return out;
}

KleinTorsionModel klein_torsion_model(KleinTorsionCase which, int g_T, int r, int s, int t) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Domain, "case " + std::string(case_name(which)) + ": " + why);
  };
  if (g_T < 0 || g_T > 4) fail("g_T must lie in 0..4 for the exhaustive model");
  if (r < 0 || s < 0 || t < 0) fail("counts must be nonnegative");
  if ((r + s) % 2 || (r + t) % 2) fail("r, s, t must share one parity");
  SympModule jt2(g_T, 2);

  switch (which) {
    case KleinTorsionCase::Ia:
    case KleinTorsionCase::Ib: {
      if (r || s || t) fail("needs r = s = t = 0");
      if (g_T == 0) fail("needs g_T >= 1 for a nonzero eta");
      if (which == KleinTorsionCase::Ia && g_T < 2) {
        fail("two distinct nonzero classes with pairing 0 need g_T >= 2");
      }
      Vec second = which == KleinTorsionCase::Ia ? jt2.basis(1) : jt2.basis(g_T);
      KleinTorsionModel out = klein_torsion_case_one(jt2, jt2.basis(0), second);
      return out;
    }
    default: break;
  }

  KleinTorsionModel out;
  out.which = which;
  out.g_T = g_T;
  out.r = r;
  out.s = s;
  out.t = t;
  SubModule whole = orthogonal(span(jt2, {}));
  const int jt = log2_of(whole.size());  // 2 g_T
  int p2[3], deg[3], meet[3][3] = {};

  if (which == KleinTorsionCase::II) {
    if (r || t || s == 0) fail("needs r = t = 0 < s");
    if (g_T == 0) fail("needs g_T >= 1 for the kernel class of the unramified quotient");
    SubModule h = span(jt2, {jt2.basis(0)});  // ker gamma* = ker b_sigma*
    SubModule hp = orthogonal(h);
    const int image = log2_of(quotient_size(whole, h));         // gamma*(JT[2])
    const int image_hp = log2_of(quotient_size(sum(hp, h), h)); // gamma*(H^perp)
    put(out, "|gamma*(JT[2])|", image, true);
    put(out, "|H^perp/H|", log2_of(quotient_size(hp, h)), true);
    p2[0] = log2_of(quotient_size(hp, h));
    p2[1] = p2[2] = p2_structure_count(g_T, s).total_dim;
    deg[0] = 0;
    deg[1] = deg[2] = log2_of(h.size());
    meet[0][1] = meet[1][0] = meet[0][2] = meet[2][0] = image_hp;
    meet[1][2] = meet[2][1] = image + (s - 2);
    out.notes.push_back("the s-2 ramification generators shared by a_tau* and a_sigmatau* are counted, not modelled");
  } else if (which == KleinTorsionCase::III) {
    if (s || r == 0 || t == 0) fail("needs s = 0 < r, t");
    put(out, "|gamma*(JT[2])|", jt, true);
    p2[0] = p2_structure_count(g_T, r + t).total_dim;
    p2[1] = p2_structure_count(g_T, r).total_dim;
    p2[2] = p2_structure_count(g_T, t).total_dim;
    deg[0] = 1;
    deg[1] = deg[2] = 0;
    meet[1][2] = meet[2][1] = jt;
    meet[0][1] = meet[1][0] = jt + r - 2;
    meet[0][2] = meet[2][0] = jt + t - 2;
    out.notes.push_back("ramification generators are counted, not modelled");
  } else if (which == KleinTorsionCase::IVa) {
    if (r != 1 || t != 1 || s == 0) fail("needs r = t = 1 and s > 0");
    put(out, "|gamma*(JT[2])|", jt, true);
    p2[0] = p2_structure_count(g_T, r + t).total_dim;
    p2[1] = p2_structure_count(g_T, r + s).total_dim;
    p2[2] = p2_structure_count(g_T, s + t).total_dim;
    deg[0] = deg[1] = deg[2] = 0;
    meet[0][1] = meet[1][0] = jt;  // a_sigma* P_sigma[2] = gamma* JT[2]
    meet[1][2] = meet[2][1] = jt + s - 1;
    meet[0][2] = meet[2][0] = jt + t - 1;
    out.notes.push_back("ramification generators are counted, not modelled; s is odd with r = t = 1");
  } else {
    if (r < 2 || s == 0 || t == 0) fail("needs r > 1 and s, t > 0");
    put(out, "|gamma*(JT[2])|", jt, true);
    p2[0] = p2_structure_count(g_T, r + t).total_dim;
    p2[1] = p2_structure_count(g_T, r + s).total_dim;
    p2[2] = p2_structure_count(g_T, s + t).total_dim;
    deg[0] = deg[1] = deg[2] = 0;
    meet[0][1] = meet[1][0] = jt + r - 1;
    meet[1][2] = meet[2][1] = jt + s - 1;
    meet[0][2] = meet[2][0] = jt + t - 1;
    out.notes.push_back("ramification generators are counted, not modelled");
  }

  for (int j = 0; j < 3; ++j) put(out, std::string("P_") + kNames[j] + "[2]", p2[j], false);
  for (int j = 0; j < 3; ++j) put(out, std::string("deg a_") + kNames[j] + "* on P", deg[j], false);
  put_meets(out, meet, false);
  put_phi(out, deg, meet, false);
  for (int j = 0; j < 3; ++j) {
    // ker spp_j = |P_j[2]| |b_j* JT cap ker a_j*| / |ker a_j*|; the ratio is
    // 1/2 only for the non-injective a_sigma* of Case III.
    int correction = which == KleinTorsionCase::III && j == 0 ? -1 : 0;
    put(out, std::string("ker spp_") + kNames[j], p2[j] + correction, false);
  }
  return out;
}

P2Structure p2_structure_count(int g, int omega) {
  if (omega < 0 || omega % 2 != 0) throw Error(ErrorKind::Domain, "total ramification must be even");
  if (g < 0) throw Error(ErrorKind::Domain, "genus must be nonnegative");
  if (g == 0 && omega == 0) throw Error(ErrorKind::Domain, "no connected unramified double cover of P^1");
  P2Structure p;
  p.g = g;
  p.omega = omega;
  p.pullback_dim = omega == 0 ? 2 * g - 2 : 2 * g;
  p.generator_dim = omega > 2 ? omega - 2 : 0;
  p.total_dim = p.pullback_dim + p.generator_dim;
  p.expected_dim = 2 * (g - 1 + omega / 2);
  if (p.total_dim != p.expected_dim) {
    throw Error(ErrorKind::Internal, "P[2] generator count disagrees with 2 dim P");
  }
  return p;
}

FactoredCard degree3_L_count(int g, int alpha) {
  if (g < 0 || alpha < 0) throw Error(ErrorKind::Domain, "genus and branch count must be nonnegative");
  return FactoredCard::pow3(alpha <= 1 ? 2LL * g : 2LL * g + alpha - 1);
}

}  // namespace fourfold
