#pragma once

#include <cmath>
#include <ostream>
#include <vector>

namespace dualpf {

/// a + b·eps with eps^2 = 0.
struct DualNumber {
  double s = 0.0;
  double d = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double standard) : s(standard) {}
  constexpr DualNumber(double standard, double dual) : s(standard), d(dual) {}

  constexpr bool positive() const { return s > 0.0; }

  constexpr DualNumber& operator+=(const DualNumber& o) {
    s += o.s;
    d += o.d;
    return *this;
  }
  constexpr DualNumber& operator-=(const DualNumber& o) {
    s -= o.s;
    d -= o.d;
    return *this;
  }
  constexpr DualNumber& operator*=(const DualNumber& o) {
    d = s * o.d + d * o.s;
    s *= o.s;
    return *this;
  }

  friend constexpr bool operator==(const DualNumber&, const DualNumber&) = default;
};

constexpr DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
constexpr DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
constexpr DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
constexpr DualNumber operator-(const DualNumber& a) { return {-a.s, -a.d}; }

// (s + d eps)^k = s^k + k s^(k-1) d eps
inline DualNumber pow(const DualNumber& x, int k) {
  if (k == 0) return {1.0, 0.0};
  return {std::pow(x.s, k), k * std::pow(x.s, k - 1) * x.d};
}

inline std::ostream& operator<<(std::ostream& os, const DualNumber& x) {
  return os << x.s << (x.d < 0 ? " - " : " + ") << std::abs(x.d) << "eps";
}

using DualVector = std::vector<DualNumber>;

}  // namespace dualpf
