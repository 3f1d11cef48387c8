#include "latcover/inequality.hpp"

#include <algorithm>

namespace latcover {

bool StrictInequality::holds(const std::vector<Rational>& lambda) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) s += coefficients[i] * lambda[i];
  return s < offset;
}

StrictInequality StrictInequality::normalized() const {
  Integer den = offset.get_den();
  for (const auto& q : coefficients) den = lcm_of(den, q.get_den());
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(coefficients.size() + 1);
  for (const auto& q : coefficients) {
    ints.push_back(q.get_num() * (den / q.get_den()));
    g = gcd_of(g, ints.back());
  }
  ints.push_back(offset.get_num() * (den / offset.get_den()));
  g = gcd_of(g, ints.back());
  if (sgn(g) == 0) return *this;
  StrictInequality out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) out.coefficients.emplace_back(Integer(ints[i] / g));
  out.offset = Integer(ints.back() / g);
  return out;
}

bool StrictInequality::equivalent(const StrictInequality& other) const {
  return normalized() == other.normalized();
}

std::string StrictInequality::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (sgn(coefficients[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coefficients[i].get_str() + ")*l" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " < " + offset.get_str();
}

bool NonMembershipCondition::holds(const std::vector<Rational>& lambda) const {
  return std::any_of(branches.begin(), branches.end(),
                     [&](const StrictInequality& b) { return b.holds(lambda); });
}

}  // namespace latcover
