#include "swalk/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "swalk/errors.hpp"
#include "swalk/subwords.hpp"
#include "swalk/walk.hpp"

namespace swalk {

namespace {

std::vector<Trapezoid> lambda_chain(std::size_t length, int64_t scale) {
  return trapezoid_chain(lambda_prefix(length), PlanePoint{}, scale);
}

std::size_t chain_length_for(std::size_t c, const ExtremaOptions& opt) {
  const std::size_t last_k =
      opt.full_scan_limit ? *opt.full_scan_limit : index_of_last_new_subword(c + 2).index - 1;
  return last_k + c + 2;
}

template <NumberSystem N>
DistanceExtrema<N> extrema_on_chain(const std::vector<Trapezoid>& chain, std::size_t c, const ExtremaOptions& opt) {
  if (c < 1) throw DomainError("separation class must be positive");
  std::vector<std::size_t> ks;
  if (opt.full_scan_limit) {
    ks.resize(*opt.full_scan_limit + 1);
    for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = k;
  } else {
    ks = distinct_subword_starts(c + 2);
    for (auto& k : ks) --k;
  }

  DistanceExtrema<N> out;
  out.c = c;
  bool first = true;
  for (std::size_t k : ks) {
    for (std::size_t sep : {c, c + 1}) {
      const Trapezoid& a = chain[k];
      const Trapezoid& b = chain[k + sep];
      const Ratio<N> lo = min_dist_sq<N>(a, b);
      const N hi = max_dist_sq<N>(a, b);
      if (first || cmp_ratio(lo, out.ell_sq) < 0) {
        out.ell_sq = lo;
        out.ell_k = k;
        out.ell_sep = sep;
      }
      if (first || sign(hi - out.h_sq) > 0) {
        out.h_sq = hi;
        out.h_k = k;
        out.h_sep = sep;
      }
      first = false;
    }
  }
  return out;
}

template <NumberSystem N>
N int_sq(std::size_t v) {
  const auto n = N::from_int(static_cast<int64_t>(v));
  return n * n;
}

}  // namespace

template <NumberSystem N>
DistanceExtrema<N> compute_extrema(std::size_t c, const ExtremaOptions& opt) {
  return extrema_on_chain<N>(lambda_chain(chain_length_for(c, opt), opt.scale), c, opt);
}

template <NumberSystem N>
std::vector<DistanceExtrema<N>> compute_extrema_range(std::size_t lo, std::size_t hi, const ExtremaOptions& opt) {
  if (lo < 1 || lo > hi) throw DomainError("need 1 <= lo <= hi");
  std::size_t length = 0;
  for (std::size_t c = lo; c <= hi; ++c) length = std::max(length, chain_length_for(c, opt));
  const std::vector<Trapezoid> chain = lambda_chain(length, opt.scale);

  std::vector<DistanceExtrema<N>> out(hi - lo + 1);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t n; (n = next.fetch_add(1)) < out.size();) out[n] = extrema_on_chain<N>(chain, lo + n, opt);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = out.size();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(out.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <NumberSystem N>
Ratio<N> chain_min_dist_sq(std::size_t k, std::size_t sep, int64_t scale) {
  const auto chain = lambda_chain(k + sep + 1, scale);
  return min_dist_sq<N>(chain[k], chain[k + sep]);
}

template <NumberSystem N>
N chain_max_dist_sq(std::size_t k, std::size_t sep, int64_t scale) {
  const auto chain = lambda_chain(k + sep + 1, scale);
  return max_dist_sq<N>(chain[k], chain[k + sep]);
}

template <NumberSystem N>
RatioReport<N> ratio_report(std::vector<DistanceExtrema<N>> extrema, N bound) {
  if (extrema.empty()) throw DomainError("empty range");
  RatioReport<N> rep;
  rep.lo = extrema.front().c;
  rep.hi = extrema.back().c;
  rep.bound = bound;
  bool first = true;
  for (const auto& e : extrema) {
    if (sign(e.ell_sq.num) <= 0) throw DomainError("trapezoids touch at separation " + std::to_string(e.c));
    // (c + 1)^2 / (num / den) = (c + 1)^2 den / num
    const Ratio<N> cf{int_sq<N>(e.c + 1) * e.ell_sq.den, e.ell_sq.num};
    const Ratio<N> df{e.h_sq, int_sq<N>(e.c)};
    if (first || cmp_ratio(cf, rep.c_factor) > 0) {
      rep.c_factor = cf;
      rep.arg_c = e.c;
    }
    if (first || cmp_ratio(df, rep.d_factor) > 0) {
      rep.d_factor = df;
      rep.arg_d = e.c;
    }
    first = false;
  }
  rep.value_sq = rep.c_factor * rep.d_factor;
  rep.holds = cmp_ratio(rep.value_sq, Ratio<N>::of(bound * bound)) < 0;
  rep.extrema = std::move(extrema);
  return rep;
}

template <NumberSystem N>
MaxDistanceReport<N> max_distance_report(std::vector<DistanceExtrema<N>> extrema, N bound) {
  if (extrema.empty()) throw DomainError("empty range");
  MaxDistanceReport<N> rep;
  rep.lo = extrema.front().c;
  rep.hi = extrema.back().c;
  rep.bound = bound;
  bool first = true;
  for (const auto& e : extrema) {
    const Ratio<N> df{e.h_sq, int_sq<N>(e.c)};
    if (first || cmp_ratio(df, rep.value_sq) > 0) {
      rep.value_sq = df;
      rep.arg_d = e.c;
    }
    first = false;
  }
  rep.holds = cmp_ratio(rep.value_sq, Ratio<N>::of(bound * bound)) <= 0;
  rep.extrema = std::move(extrema);
  return rep;
}

template <NumberSystem N>
RatioReport<N> assert_ratio_bounded(std::size_t lo, std::size_t hi, N bound, const ExtremaOptions& opt) {
  if (lo < 7 || lo > hi) throw DomainError("need 7 <= lo <= hi");
  return ratio_report(compute_extrema_range<N>(lo, hi, opt), bound);
}

template <NumberSystem N>
MaxDistanceReport<N> assert_max_distance(std::size_t lo, std::size_t hi, N bound, const ExtremaOptions& opt) {
  if (lo < 7 || lo > hi) throw DomainError("need 7 <= lo <= hi");
  return max_distance_report(compute_extrema_range<N>(lo, hi, opt), bound);
}

#define SWALK_INSTANTIATE(N)                                                                                       \
  template DistanceExtrema<N> compute_extrema<N>(std::size_t, const ExtremaOptions&);                           \
  template std::vector<DistanceExtrema<N>> compute_extrema_range<N>(std::size_t, std::size_t,                   \
                                                                    const ExtremaOptions&);                     \
  template Ratio<N> chain_min_dist_sq<N>(std::size_t, std::size_t, int64_t);                                    \
  template N chain_max_dist_sq<N>(std::size_t, std::size_t, int64_t);                                           \
  template RatioReport<N> ratio_report<N>(std::vector<DistanceExtrema<N>>, N);                                  \
  template MaxDistanceReport<N> max_distance_report<N>(std::vector<DistanceExtrema<N>>, N);                     \
  template RatioReport<N> assert_ratio_bounded<N>(std::size_t, std::size_t, N, const ExtremaOptions&);          \
  template MaxDistanceReport<N> assert_max_distance<N>(std::size_t, std::size_t, N, const ExtremaOptions&);

SWALK_INSTANTIATE(Rt3Num)
SWALK_INSTANTIATE(DoubleRep)

#undef SWALK_INSTANTIATE

Order0Extrema order0_extrema(std::size_t c) {
  if (c < 1 || c > 6) throw DomainError("order-0 extrema are defined for 1 <= c <= 6");
  const auto starts = distinct_subword_starts(c + 1);
  const auto walk = walk_prefix(starts.back() + c);
  Order0Extrema out{c, 0, 0};
  bool first = true;
  for (std::size_t s : starts) {
    // window covers walk steps s .. s + c, i.e. points s - 1 .. s + c
    for (std::size_t p : {s - 1, s}) {
      const wide q = perp_norm_sq(walk[p + c] - walk[p]);
      if (first || q < out.min_q) out.min_q = q;
      if (first || q > out.max_q) out.max_q = q;
      first = false;
    }
  }
  return out;
}

Rt3Ratio seven_fourths_sq(int e) {
  wide num = 1, den = 1;
  for (int n = 0; n < 2 * e; ++n) {
    num = checked_mul(num, 7);
    den = checked_mul(den, 4);
  }
  return {Rt3Num(num, 0), Rt3Num(den, 0)};
}

Rt3Ratio chain_value_sq(const Rt3Ratio& max_h_over_d_sq) {
  return max_h_over_d_sq * Rt3Ratio{Rt3Num(100, 0), Rt3Num(9, 0)};
}

}  // namespace swalk
