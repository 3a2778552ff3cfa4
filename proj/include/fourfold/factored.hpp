#pragma once

// Positive integers of the form 2^a * 3^b kept as exponent pairs.

#include <cstdint>
#include <optional>
#include <string>

namespace fourfold {

class FactoredCard {
 public:
  constexpr FactoredCard() = default;
  // Throws Error(Domain) on a negative exponent.
  FactoredCard(std::int64_t exp2, std::int64_t exp3);

  static FactoredCard pow2(std::int64_t e) { return {e, 0}; }
  static FactoredCard pow3(std::int64_t e) { return {0, e}; }
  // Throws Error(Domain) unless n is a positive 2^a * 3^b.
  static FactoredCard from_integer(std::uint64_t n);

  std::int64_t exp2() const { return exp2_; }
  std::int64_t exp3() const { return exp3_; }

  FactoredCard operator*(const FactoredCard& o) const;
  FactoredCard pow(std::int64_t k) const;
  // Exact quotient; nullopt if o does not divide *this.
  std::optional<FactoredCard> divide(const FactoredCard& o) const;
  bool divides(const FactoredCard& o) const;

  // e.g. "2^25*3^4", "1", "2^3".
  std::string to_string() const;
  // Decimal expansion; nullopt above max_bits to keep output bounded.
  std::optional<std::string> decimal(std::int64_t max_bits = 4096) const;
  std::optional<std::uint64_t> to_u64() const;

  friend bool operator==(const FactoredCard&, const FactoredCard&) = default;

 private:
  std::int64_t exp2_ = 0;
  std::int64_t exp3_ = 0;
};

}  // namespace fourfold
