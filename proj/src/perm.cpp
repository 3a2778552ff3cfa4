#include "fourfold/perm.hpp"

#include <algorithm>
#include <cctype>

#include "fourfold/errors.hpp"

namespace fourfold {

int class_order(CycleClass c) {
  switch (c) {
    case CycleClass::Identity: return 1;
    case CycleClass::Transposition: return 2;
    case CycleClass::DoubleTransposition: return 2;
    case CycleClass::ThreeCycle: return 3;
    case CycleClass::FourCycle: return 4;
  }
  return 0;
}

std::string_view class_name(CycleClass c) {
  switch (c) {
    case CycleClass::Identity: return "ID";
    case CycleClass::Transposition: return "TRANSPOSITION";
    case CycleClass::DoubleTransposition: return "DOUBLE_TRANSPOSITION";
    case CycleClass::ThreeCycle: return "THREE_CYCLE";
    case CycleClass::FourCycle: return "FOUR_CYCLE";
  }
  return "?";
}

Perm Perm::from_images(const std::array<int, 4>& images) {
  std::array<bool, 4> seen{};
  Perm p;
  for (int i = 0; i < 4; ++i) {
    int v = images[i];
    if (v < 1 || v > 4 || seen[v - 1]) {
      throw Error(ErrorKind::Parse, "image array is not a bijection of {1,2,3,4}");
    }
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw Error(ErrorKind::Parse, "empty permutation text");
  if (compact == "e" || compact == "()") return Perm{};

  Perm result;
  std::size_t pos = 0;
  std::vector<Perm> cycles;
  while (pos < compact.size()) {
    if (compact[pos] != '(') {
      throw Error(ErrorKind::Parse, "expected '(' in \"" + std::string(text) + "\"");
    }
    std::size_t close = compact.find(')', pos);
    if (close == std::string::npos) {
      throw Error(ErrorKind::Parse, "unbalanced cycle in \"" + std::string(text) + "\"");
    }
    std::vector<int> pts;
    for (std::size_t i = pos + 1; i < close; ++i) {
      char ch = compact[i];
      if (ch < '1' || ch > '4') {
        throw Error(ErrorKind::Parse, "symbol out of range in \"" + std::string(text) + "\"");
      }
      int v = ch - '0';
      if (std::find(pts.begin(), pts.end(), v) != pts.end()) {
        throw Error(ErrorKind::Parse, "repeated symbol in a cycle of \"" + std::string(text) + "\"");
      }
      pts.push_back(v);
    }
    std::array<int, 4> img{1, 2, 3, 4};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      img[pts[i] - 1] = pts[(i + 1) % pts.size()];
    }
    cycles.push_back(from_images(img));
    pos = close + 1;
  }
  for (const Perm& c : cycles) result = compose(result, c);
  return result;
}

Perm Perm::from_index(int index) {
  if (index < 0 || index >= 24) throw Error(ErrorKind::Domain, "permutation index out of range");
  return all_perms()[index];
}

Perm Perm::inverse() const {
  Perm q;
  for (int i = 0; i < 4; ++i) q.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return q;
}

CycleClass Perm::cycle_class() const {
  std::array<bool, 4> seen{};
  int longest = 0;
  int twos = 0;
  for (int i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j] - 1;
      ++len;
    }
    longest = std::max(longest, len);
    if (len == 2) ++twos;
  }
  switch (longest) {
    case 1: return CycleClass::Identity;
    case 2: return twos == 2 ? CycleClass::DoubleTransposition : CycleClass::Transposition;
    case 3: return CycleClass::ThreeCycle;
    default: return CycleClass::FourCycle;
  }
}

int Perm::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int Perm::index() const {
  // Lehmer code in base factorial.
  static constexpr int fact[4] = {6, 2, 1, 0};
  int idx = 0;
  for (int i = 0; i < 3; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 4; ++j)
      if (img_[j] < img_[i]) ++smaller;
    idx += smaller * fact[i];
  }
  return idx;
}

std::string Perm::to_string() const {
  if (is_identity()) return "e";
  std::string out;
  std::array<bool, 4> seen{};
  for (int i = 0; i < 4; ++i) {
    if (seen[i] || img_[i] == i + 1) continue;
    out.push_back('(');
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out.push_back(' ');
      out.push_back(static_cast<char>('1' + j));
      first = false;
      j = img_[j] - 1;
    }
    out.push_back(')');
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  std::array<int, 4> img{};
  for (int i = 1; i <= 4; ++i) img[i - 1] = p(q(i));
  return Perm::from_images(img);
}

Perm power(const Perm& p, int k) {
  int ord = p.order();
  k %= ord;
  if (k < 0) k += ord;
  Perm r;
  for (int i = 0; i < k; ++i) r = compose(r, p);
  return r;
}

Perm conjugate(const Perm& x, const Perm& p) { return x * p * x.inverse(); }

Perm commutator(const Perm& a, const Perm& b) {
  return a * b * a.inverse() * b.inverse();
}

const std::array<Perm, 24>& all_perms() {
  static const std::array<Perm, 24> table = [] {
    std::array<Perm, 24> t;
    std::array<int, 4> img{1, 2, 3, 4};
    int i = 0;
    do {
      t[i++] = Perm::from_images(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return t;
  }();
  return table;
}

namespace {

struct IndexTables {
  std::array<std::array<std::uint8_t, 24>, 24> mul{};
  std::array<std::uint8_t, 24> inv{};
};

const IndexTables& index_tables() {
  static const IndexTables tables = [] {
    IndexTables t;
    const auto& perms = all_perms();
    for (int a = 0; a < 24; ++a) {
      t.inv[a] = static_cast<std::uint8_t>(perms[a].inverse().index());
      for (int b = 0; b < 24; ++b)
        t.mul[a][b] = static_cast<std::uint8_t>((perms[a] * perms[b]).index());
    }
    return t;
  }();
  return tables;
}

}  // namespace

int mul_index(int a, int b) { return index_tables().mul[a][b]; }
int inv_index(int a) { return index_tables().inv[a]; }

PermSet to_set(const std::vector<Perm>& perms) {
  PermSet s;
  for (const Perm& p : perms) s.set(p.index());
  return s;
}

std::vector<Perm> to_vector(const PermSet& set) {
  std::vector<Perm> out;
  for (int i = 0; i < 24; ++i)
    if (set.test(i)) out.push_back(all_perms()[i]);
  return out;
}

PermSet closure(const PermSet& generators) {
  PermSet group;
  group.set(0);
  std::vector<Perm> frontier{Perm{}};
  const std::vector<Perm> gens = to_vector(generators);
  while (!frontier.empty()) {
    Perm x = frontier.back();
    frontier.pop_back();
    for (const Perm& s : gens) {
      Perm y = x * s;
      if (!group.test(y.index())) {
        group.set(y.index());
        frontier.push_back(y);
      }
    }
  }
  return group;
}

PermSet conjugacy_class_in(const Perm& p, const PermSet& group) {
  PermSet cls;
  for (int i = 0; i < 24; ++i)
    if (group.test(i)) cls.set(conjugate(all_perms()[i], p).index());
  return cls;
}

std::vector<Perm> conjugators_between(const Perm& a, const Perm& b) {
  std::vector<Perm> out;
  for (const Perm& g : all_perms())
    if (conjugate(g, a) == b) out.push_back(g);
  return out;
}

}  // namespace fourfold
