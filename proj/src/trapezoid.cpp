#include "swalk/trapezoid.hpp"

#include "swalk/errors.hpp"

namespace swalk {

namespace {

int64_t exact_div6(int64_t v) {
  if (v % 6 != 0) throw DomainError("trapezoid base not on the scaled lattice");
  return v / 6;
}

int64_t pow7(int order) {
  int64_t r = 1;
  for (int n = 0; n < order; ++n) r = checked_narrow(checked_mul(r, 7));
  return r;
}

}  // namespace

wide plane_norm_sq(const PlanePoint& v) {
  return checked_add(checked_mul(v.x, v.x), checked_mul(3, checked_mul(v.y3, v.y3)));
}

wide plane_cross(const PlanePoint& u, const PlanePoint& w) {
  return checked_sub(checked_mul(u.x, w.y3), checked_mul(u.y3, w.x));
}

wide plane_dot(const PlanePoint& u, const PlanePoint& w) {
  return checked_add(checked_mul(u.x, w.x), checked_mul(3, checked_mul(u.y3, w.y3)));
}

PlanePoint project_step(Step s) {
  switch (s) {
    case Step::i: return {6, 0};
    case Step::j: return {-3, 3};
    case Step::k: return {-3, -3};
  }
  return {};
}

PlanePoint project(const Point3& z) {
  return {checked_narrow(checked_sub(checked_mul(6, z.x), checked_mul(3, checked_add(z.y, z.z)))),
          checked_narrow(checked_mul(3, checked_sub(z.y, z.z)))};
}

Step base_step(Orientation o) { return static_cast<Step>(permute_step(o, 0)); }

Trapezoid make_trapezoid(PlanePoint start, PlanePoint d, Orientation o, std::size_t seq_index) {
  Trapezoid t;
  t.orientation = o;
  t.seq_index = seq_index;
  t.v[0] = start;
  t.v[1] = start + d;
  if (is_rotation(o)) {
    t.v[2] = start + PlanePoint{exact_div6(5 * d.x - 3 * d.y3), exact_div6(5 * d.y3 + d.x)};
    t.v[3] = start + PlanePoint{exact_div6(d.x - 3 * d.y3), exact_div6(d.y3 + d.x)};
  } else {
    t.v[2] = start + PlanePoint{exact_div6(5 * d.x + 3 * d.y3), exact_div6(5 * d.y3 - d.x)};
    t.v[3] = start + PlanePoint{exact_div6(d.x + 3 * d.y3), exact_div6(d.y3 - d.x)};
  }
  return t;
}

std::vector<Trapezoid> trapezoid_chain(const std::vector<Orientation>& seq, PlanePoint origin, int64_t scale) {
  require_budget(seq.size() * sizeof(Trapezoid), "trapezoid chain");
  std::vector<Trapezoid> out;
  out.reserve(seq.size());
  PlanePoint at = origin;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    const PlanePoint unit = project_step(base_step(seq[m]));
    const PlanePoint d{unit.x * scale, unit.y3 * scale};
    out.push_back(make_trapezoid(at, d, seq[m], m));
    at = at + d;
  }
  return out;
}

std::vector<Trapezoid> trapezoid_chain(const Word& w, PlanePoint origin, int64_t scale) {
  return trapezoid_chain(psi(w), origin, scale);
}

bool contains(const Trapezoid& t, const PlanePoint& p) {
  int seen = 0;
  for (int e = 0; e < 4; ++e) {
    const wide c = plane_cross(t.v[(e + 1) % 4] - t.v[e], p - t.v[e]);
    const int s = (c > 0) - (c < 0);
    if (s == 0) continue;
    if (seen != 0 && s != seen) return false;
    seen = s;
  }
  return true;
}

bool intersects(const Trapezoid& a, const Trapezoid& b) {
  const auto pa = detail::lift<Rt3Num>(a);
  const auto pb = detail::lift<Rt3Num>(b);
  return !detail::separated_by_edges(pa, pb) && !detail::separated_by_edges(pb, pa);
}

std::vector<Trapezoid> order_n_chain(int order, std::size_t count) {
  if (order < 0) throw DomainError("order must be nonnegative");
  const auto span = static_cast<std::size_t>(pow7(order));
  const std::vector<Point3> walk = walk_prefix(count * span);
  const Word w = lambda_prefix(count);
  std::vector<Trapezoid> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    const PlanePoint s = project(walk[m * span]);
    out.push_back(make_trapezoid(s, project(walk[(m + 1) * span]) - s, psi(w[m]), m));
  }
  return out;
}

}  // namespace swalk
