#include "fourfold/factored.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "fourfold/errors.hpp"

namespace fourfold {

FactoredCard::FactoredCard(std::int64_t exp2, std::int64_t exp3) : exp2_(exp2), exp3_(exp3) {
  if (exp2 < 0 || exp3 < 0) {
    throw Error(ErrorKind::Domain, "negative exponent in factored cardinality (2^" +
                                       std::to_string(exp2) + "*3^" + std::to_string(exp3) + ")");
  }
}

FactoredCard FactoredCard::from_integer(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "cardinality must be positive");
  std::int64_t a = 0;
  std::int64_t b = 0;
  while (n % 2 == 0) { n /= 2; ++a; }
  while (n % 3 == 0) { n /= 3; ++b; }
  if (n != 1) throw Error(ErrorKind::Domain, "value has a prime factor other than 2 and 3");
  return {a, b};
}

FactoredCard FactoredCard::operator*(const FactoredCard& o) const {
  return {exp2_ + o.exp2_, exp3_ + o.exp3_};
}

FactoredCard FactoredCard::pow(std::int64_t k) const {
  if (k < 0) throw Error(ErrorKind::Domain, "negative power");
  return {exp2_ * k, exp3_ * k};
}

std::optional<FactoredCard> FactoredCard::divide(const FactoredCard& o) const {
  if (!o.divides(*this)) return std::nullopt;
  return FactoredCard{exp2_ - o.exp2_, exp3_ - o.exp3_};
}

bool FactoredCard::divides(const FactoredCard& o) const {
  return exp2_ <= o.exp2_ && exp3_ <= o.exp3_;
}

std::string FactoredCard::to_string() const {
  if (exp2_ == 0 && exp3_ == 0) return "1";
  std::string out;
  if (exp2_ > 0) out = exp2_ == 1 ? "2" : "2^" + std::to_string(exp2_);
  if (exp3_ > 0) {
    if (!out.empty()) out += "*";
    out += exp3_ == 1 ? "3" : "3^" + std::to_string(exp3_);
  }
  return out;
}

std::optional<std::string> FactoredCard::decimal(std::int64_t max_bits) const {
  // log2(3) < 1.585
  if (exp2_ + (exp3_ * 1585) / 1000 + 1 > max_bits) return std::nullopt;
  using boost::multiprecision::cpp_int;
  cpp_int v = boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(exp2_)) *
              boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(exp3_));
  return v.str();
}

std::optional<std::uint64_t> FactoredCard::to_u64() const {
  if (exp2_ + (exp3_ * 1585) / 1000 + 1 > 63) return std::nullopt;
  std::uint64_t v = 1;
  for (std::int64_t i = 0; i < exp2_; ++i) v *= 2;
  for (std::int64_t i = 0; i < exp3_; ++i) v *= 3;
  return v;
}

}  // namespace fourfold
