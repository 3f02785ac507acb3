#pragma once

// Exact arithmetic in Z[sqrt(3)] and fractions over it.
//
// Every geometric quantity in the scaled trapezoid plane is of the form
// w + r*sqrt(3) with integer w, r. Rt3Num keeps both coefficients in checked
// 128-bit integers; sign and comparison are decided without division or
// square roots.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include "swalk/checked.hpp"

namespace swalk {

class Rt3Num {
 public:
  constexpr Rt3Num() = default;
  constexpr Rt3Num(wide whole, wide rt3) : whole_(whole), rt3_(rt3) {}

  static constexpr Rt3Num from_int(int64_t w) { return {w, 0}; }
  static constexpr Rt3Num from_rt3(int64_t r) { return {0, r}; }

  constexpr wide whole() const { return whole_; }
  constexpr wide rt3() const { return rt3_; }

  friend Rt3Num operator+(const Rt3Num& x, const Rt3Num& y) {
    return {checked_add(x.whole_, y.whole_), checked_add(x.rt3_, y.rt3_)};
  }
  friend Rt3Num operator-(const Rt3Num& x, const Rt3Num& y) {
    return {checked_sub(x.whole_, y.whole_), checked_sub(x.rt3_, y.rt3_)};
  }
  friend Rt3Num operator-(const Rt3Num& x) { return {checked_neg(x.whole_), checked_neg(x.rt3_)}; }

  // (a + b r3)(c + d r3) = (ac + 3bd) + (ad + bc) r3
  friend Rt3Num operator*(const Rt3Num& x, const Rt3Num& y) {
    wide bd = checked_mul(x.rt3_, y.rt3_);
    wide whole = checked_add(checked_mul(x.whole_, y.whole_), checked_mul(bd, 3));
    wide rt3 = checked_add(checked_mul(x.whole_, y.rt3_), checked_mul(x.rt3_, y.whole_));
    return {whole, rt3};
  }

  // Representation is unique because sqrt(3) is irrational.
  friend constexpr bool operator==(const Rt3Num&, const Rt3Num&) = default;

  double approx() const;

 private:
  wide whole_ = 0;
  wide rt3_ = 0;
};

// Sign of whole + rt3*sqrt(3) as -1, 0 or +1.
int sign(const Rt3Num& x);

inline std::strong_ordering compare(const Rt3Num& x, const Rt3Num& y) {
  int s = sign(x - y);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// Renders "w+r√3" / "w-r√3".
std::string to_string(const Rt3Num& x);

// Floating stand-in with the same interface. Used only to cross-check exact
// results in tests and behind the hidden --floating CLI flag.
class DoubleRep {
 public:
  constexpr DoubleRep() = default;
  constexpr explicit DoubleRep(double v) : v_(v) {}

  static DoubleRep from_int(int64_t w) { return DoubleRep(static_cast<double>(w)); }
  static DoubleRep from_rt3(int64_t r);

  double value() const { return v_; }
  double approx() const { return v_; }

  friend DoubleRep operator+(DoubleRep x, DoubleRep y) { return DoubleRep(x.v_ + y.v_); }
  friend DoubleRep operator-(DoubleRep x, DoubleRep y) { return DoubleRep(x.v_ - y.v_); }
  friend DoubleRep operator-(DoubleRep x) { return DoubleRep(-x.v_); }
  friend DoubleRep operator*(DoubleRep x, DoubleRep y) { return DoubleRep(x.v_ * y.v_); }
  friend bool operator==(DoubleRep, DoubleRep) = default;

 private:
  double v_ = 0.0;
};

inline int sign(const DoubleRep& x) { return (x.value() > 0) - (x.value() < 0); }
std::string to_string(const DoubleRep& x);

template <class N>
concept NumberSystem = requires(N a, N b, int64_t i) {
  { N::from_int(i) } -> std::same_as<N>;
  { N::from_rt3(i) } -> std::same_as<N>;
  { a + b } -> std::same_as<N>;
  { a - b } -> std::same_as<N>;
  { a * b } -> std::same_as<N>;
  { sign(a) } -> std::same_as<int>;
  { a.approx() } -> std::same_as<double>;
};

// num/den with den > 0. Never reduced; compared by cross-multiplication.
template <NumberSystem N>
struct Ratio {
  N num{};
  N den = N::from_int(1);

  static Ratio of(N n) { return {n, N::from_int(1)}; }

  double approx() const { return num.approx() / den.approx(); }
};

using Rt3Ratio = Ratio<Rt3Num>;

template <NumberSystem N>
int cmp_ratio(const Ratio<N>& x, const Ratio<N>& y) {
  return sign(x.num * y.den - y.num * x.den);
}

template <NumberSystem N>
Ratio<N> operator*(const Ratio<N>& x, const Ratio<N>& y) {
  return {x.num * y.num, x.den * y.den};
}

// Throws DomainError unless den is positive.
template <NumberSystem N>
Ratio<N> make_ratio(N num, N den) {
  if (sign(den) <= 0) throw DomainError("ratio denominator must be positive");
  return {num, den};
}

std::string to_string(const Rt3Ratio& x);

}  // namespace swalk
