#pragma once

// JSON forms of results. Exact values carry their coefficients; "approx"
// fields are for reading only.

#include <cmath>
#include <string>

#include <json.hpp>

#include "swalk/bounds.hpp"
#include "swalk/subwords.hpp"
#include "swalk/sweep.hpp"
#include "swalk/walk.hpp"

namespace swalk {

using Json = nlohmann::json;

Json to_json(wide v);
Json to_json(const Rt3Num& x);
Json to_json(const DoubleRep& x);
Json to_json(const PlanePoint& p);
Json to_json(const Point3& p);

template <NumberSystem N>
Json to_json(const Ratio<N>& r) {
  return {{"num", to_json(r.num)}, {"den", to_json(r.den)}, {"approx", r.approx()}};
}

template <NumberSystem N>
Json to_json(const DistanceExtrema<N>& e) {
  return {{"c", e.c},
          {"ell_sq", to_json(e.ell_sq)},
          {"h_sq", to_json(e.h_sq)},
          {"ell_witness", {{"k", e.ell_k}, {"separation", e.ell_sep}}},
          {"h_witness", {{"k", e.h_k}, {"separation", e.h_sep}}}};
}

template <NumberSystem N>
Json to_json(const RatioReport<N>& r) {
  Json per_c = Json::array();
  for (const auto& e : r.extrema) per_c.push_back(to_json(e));
  return {{"lo", r.lo},
          {"hi", r.hi},
          {"bound", to_json(r.bound)},
          {"holds", r.holds},
          {"arg_c", r.arg_c},
          {"arg_d", r.arg_d},
          {"c_factor_sq", to_json(r.c_factor)},
          {"d_factor_sq", to_json(r.d_factor)},
          {"value_sq", to_json(r.value_sq)},
          {"value_approx", std::sqrt(r.value_sq.approx())},
          {"extrema", per_c}};
}

template <NumberSystem N>
Json to_json(const MaxDistanceReport<N>& r) {
  Json per_d = Json::array();
  for (const auto& e : r.extrema) per_d.push_back(to_json(e));
  return {{"lo", r.lo},
          {"hi", r.hi},
          {"bound", to_json(r.bound)},
          {"holds", r.holds},
          {"arg_d", r.arg_d},
          {"value_sq", to_json(r.value_sq)},
          {"value_approx", std::sqrt(r.value_sq.approx())},
          {"extrema", per_d}};
}

Json to_json(const NoveltyIndex& n);
Json to_json(const Order0Extrema& e);
Json to_json(const CollinearReport& r);
Json to_json(const ChunkResult& r);
Json to_json(const StabbingReport& r);

// Run record: command, parameters, result payload, exact flag, wall time.
Json run_record(const std::string& command, Json parameters, Json result, bool exact, double wall_seconds);

}  // namespace swalk
