#pragma once

// Permutations of {1,2,3,4}. Products are read right to left:
// compose(p, q) applies q first, then p.

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fourfold {

enum class CycleClass : std::uint8_t {
  Identity,
  Transposition,
  DoubleTransposition,
  ThreeCycle,
  FourCycle
};

int class_order(CycleClass c);
std::string_view class_name(CycleClass c);

class Perm {
 public:
  constexpr Perm() : img_{1, 2, 3, 4} {}

  // Throws Error(Parse) unless images is a bijection of {1,2,3,4}.
  static Perm from_images(const std::array<int, 4>& images);
  // Cycle notation, e.g. "(1 2)(3 4)", "(12)(34)" or "e". Cycles are
  // multiplied right to left.
  static Perm parse(std::string_view text);
  // Position in the lexicographic listing of all 24 permutations.
  static Perm from_index(int index);

  int operator()(int point) const { return img_[point - 1]; }
  const std::array<std::uint8_t, 4>& images() const { return img_; }

  Perm inverse() const;
  CycleClass cycle_class() const;
  int order() const { return class_order(cycle_class()); }
  int sign() const;
  int index() const;
  bool is_identity() const { return img_ == std::array<std::uint8_t, 4>{1, 2, 3, 4}; }
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
Perm power(const Perm& p, int k);
Perm conjugate(const Perm& x, const Perm& p);  // x p x^-1
Perm commutator(const Perm& a, const Perm& b);  // a b a^-1 b^-1

// All 24 permutations, lexicographic by image array; index 0 is identity.
const std::array<Perm, 24>& all_perms();

// Sets of permutations as bit masks over index().
using PermSet = std::bitset<24>;

// Index-level arithmetic for hot loops: mul_index(a, b) is the index of
// from_index(a) * from_index(b).
int mul_index(int a, int b);
int inv_index(int a);

PermSet to_set(const std::vector<Perm>& perms);
std::vector<Perm> to_vector(const PermSet& set);
PermSet closure(const PermSet& generators);
PermSet conjugacy_class_in(const Perm& p, const PermSet& group);

std::vector<Perm> conjugators_between(const Perm& a, const Perm& b);

}  // namespace fourfold
