#include "swalk/report.hpp"

namespace swalk {

Json to_json(wide v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<int64_t>(v);
  return to_string(v);
}

Json to_json(const Rt3Num& x) {
  return {{"whole", to_json(x.whole())}, {"rt3", to_json(x.rt3())}, {"text", to_string(x)}, {"approx", x.approx()}};
}

Json to_json(const DoubleRep& x) { return {{"approx", x.value()}}; }

Json to_json(const PlanePoint& p) { return {{"x", p.x}, {"y3", p.y3}}; }

Json to_json(const Point3& p) { return Json::array({p.x, p.y, p.z}); }

Json to_json(const NoveltyIndex& n) {
  return {{"length", n.length}, {"index", n.index}, {"bound_used", n.bound_used}};
}

Json to_json(const Order0Extrema& e) {
  return {{"c", e.c}, {"min_q", to_json(e.min_q)}, {"max_q", to_json(e.max_q)}};
}

Json to_json(const CollinearReport& r) {
  return {{"max_points", r.max_points},
          {"witness_indices", r.witness_indices},
          {"witness_line", {{"dir", to_json(r.witness_line.dir)}, {"base", to_json(r.witness_line.base)}}}};
}

Json to_json(const ChunkResult& r) {
  return {{"start", r.start}, {"end", r.end}, {"max_points", r.max_points}, {"witness_indices", r.witness_indices}};
}

Json to_json(const StabbingReport& r) {
  return {{"window", r.window},
          {"contexts", r.contexts},
          {"max", r.max},
          {"witness",
           {{"context_start", r.context_start},
            {"context", format_orientations(r.context)},
            {"pivot_trapezoid", r.hit.pivot_trapezoid},
            {"pivot_vertex", r.hit.pivot_vertex},
            {"pivot", to_json(r.hit.pivot)},
            {"direction", to_json(r.hit.direction)},
            {"window_start", r.hit.window_start}}}};
}

Json run_record(const std::string& command, Json parameters, Json result, bool exact, double wall_seconds) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"exact", exact},
          {"wall_time_s", wall_seconds}};
}

}  // namespace swalk
