#pragma once

// Distance extrema between order-0 trapezoids of the lambda chain and the
// ratio assertions built on them.
//
// For a separation class c the chain trapezoids k, k + c and k + c + 1 are
// compared. ell_sq(c) is the smallest squared distance between T^k and either
// partner, h_sq(c) the largest squared vertex distance. All values are in
// scaled units (order-0 base 6), so ratios are scale-free.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swalk/rt3.hpp"
#include "swalk/trapezoid.hpp"

namespace swalk {

template <NumberSystem N>
struct DistanceExtrema {
  std::size_t c = 0;
  Ratio<N> ell_sq;
  N h_sq{};
  // Witnesses: chain index k and separation (c or c + 1).
  std::size_t ell_k = 0;
  std::size_t ell_sep = 0;
  std::size_t h_k = 0;
  std::size_t h_sep = 0;
};

struct ExtremaOptions {
  int64_t scale = 1;
  unsigned workers = 1;
  // Scan every k in [0, limit] instead of one k per distinct subword of
  // length c + 2.
  std::optional<std::size_t> full_scan_limit;
};

template <NumberSystem N = Rt3Num>
DistanceExtrema<N> compute_extrema(std::size_t c, const ExtremaOptions& opt = {});

// One entry per c in [lo, hi], ascending.
template <NumberSystem N = Rt3Num>
std::vector<DistanceExtrema<N>> compute_extrema_range(std::size_t lo, std::size_t hi, const ExtremaOptions& opt = {});

// Re-evaluates a witness pair on the lambda chain.
template <NumberSystem N = Rt3Num>
Ratio<N> chain_min_dist_sq(std::size_t k, std::size_t sep, int64_t scale = 1);
template <NumberSystem N = Rt3Num>
N chain_max_dist_sq(std::size_t k, std::size_t sep, int64_t scale = 1);

template <NumberSystem N>
struct RatioReport {
  std::size_t lo = 0;
  std::size_t hi = 0;
  N bound{};
  std::size_t arg_c = 0;
  std::size_t arg_d = 0;
  Ratio<N> c_factor;  // (c + 1)^2 / ell_sq(c), maximized
  Ratio<N> d_factor;  // h_sq(d) / d^2, maximized
  Ratio<N> value_sq;  // product of the two
  bool holds = false;  // value_sq < bound^2
  std::vector<DistanceExtrema<N>> extrema;
};

template <NumberSystem N>
struct MaxDistanceReport {
  std::size_t lo = 0;
  std::size_t hi = 0;
  N bound{};
  std::size_t arg_d = 0;
  Ratio<N> value_sq;  // max h_sq(d) / d^2
  bool holds = false;  // value_sq <= bound^2
  std::vector<DistanceExtrema<N>> extrema;
};

// Largest (c + 1) h(d) / (d ell(c)) over c, d in [lo, hi], compared with bound
// on squares.
template <NumberSystem N = Rt3Num>
RatioReport<N> assert_ratio_bounded(std::size_t lo, std::size_t hi, N bound, const ExtremaOptions& opt = {});

template <NumberSystem N = Rt3Num>
MaxDistanceReport<N> assert_max_distance(std::size_t lo, std::size_t hi, N bound, const ExtremaOptions& opt = {});

// Builds both reports from already computed extrema.
template <NumberSystem N>
RatioReport<N> ratio_report(std::vector<DistanceExtrema<N>> extrema, N bound);
template <NumberSystem N>
MaxDistanceReport<N> max_distance_report(std::vector<DistanceExtrema<N>> extrema, N bound);

// Squared perpendicular norm extrema of z_q - z_p over all |p - q| = c.
struct Order0Extrema {
  std::size_t c = 0;
  wide min_q = 0;
  wide max_q = 0;
};

Order0Extrema order0_extrema(std::size_t c);

// (7/4)^e squared, as an exact ratio.
Rt3Ratio seven_fourths_sq(int e);

// The n = 0 chain value 5 h(1,d) / (gamma d) in unscaled units, given
// max_d h_sq / d^2 in scaled units: 100/9 times it. Squared.
Rt3Ratio chain_value_sq(const Rt3Ratio& max_h_over_d_sq);

}  // namespace swalk
