#include "swalk/rt3.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swalk {

std::string to_string(wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work in the negative range so INT128_MIN does not overflow.
  std::string out;
  wide n = neg ? v : -v;
  while (n != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(n % 10)));
    n /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

int sign(const Rt3Num& x) {
  const wide a = x.whole();
  const wide b = x.rt3();
  const int sa = (a > 0) - (a < 0);
  const int sb = (b > 0) - (b < 0);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: |a| vs sqrt(3)|b| decided by a^2 vs 3b^2.
  const wide aa = checked_mul(a, a);
  const wide bb3 = checked_mul(checked_mul(b, b), 3);
  if (aa == bb3) return 0;  // unreachable for integers, kept for totality
  return aa > bb3 ? sa : sb;
}

double Rt3Num::approx() const {
  return static_cast<double>(whole_) + static_cast<double>(rt3_) * std::sqrt(3.0);
}

std::string to_string(const Rt3Num& x) {
  std::string out = to_string(x.whole());
  if (x.rt3() < 0) {
    out += "-" + to_string(checked_neg(x.rt3()));
  } else {
    out += "+" + to_string(x.rt3());
  }
  return out + "√3";
}

DoubleRep DoubleRep::from_rt3(int64_t r) { return DoubleRep(static_cast<double>(r) * std::sqrt(3.0)); }

std::string to_string(const DoubleRep& x) {
  std::ostringstream os;
  os.precision(17);
  os << x.value();
  return os.str();
}

std::string to_string(const Rt3Ratio& x) { return "(" + to_string(x.num) + ")/(" + to_string(x.den) + ")"; }

}  // namespace swalk
