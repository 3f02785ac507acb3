#pragma once

// Order-0 trapezoid chains in the plane perpendicular to (1,1,1).
//
// Plane points are stored as (x, y3) with true coordinates (x, y3 * sqrt(3)).
// Unit steps project to i -> (6,0), j -> (-3,3), k -> (-3,-3), so the
// order-0 trapezoid has base 6, top 4, legs 2 and height sqrt(3).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "swalk/orientation.hpp"
#include "swalk/rt3.hpp"
#include "swalk/symbols.hpp"
#include "swalk/walk.hpp"

namespace swalk {

struct PlanePoint {
  int64_t x = 0;
  int64_t y3 = 0;

  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) { return {a.x + b.x, a.y3 + b.y3}; }
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) { return {a.x - b.x, a.y3 - b.y3}; }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

// Squared Euclidean length dx^2 + 3 dy3^2.
wide plane_norm_sq(const PlanePoint& v);

// Cross product u x w divided by sqrt(3); the true value has the same sign.
wide plane_cross(const PlanePoint& u, const PlanePoint& w);

// Dot product u . w.
wide plane_dot(const PlanePoint& u, const PlanePoint& w);

PlanePoint project_step(Step s);
PlanePoint project(const Point3& z);

// Base direction of an orientation (a, b -> i; c, d -> j; e, f -> k).
Step base_step(Orientation o);

struct Trapezoid {
  // base-start, base-end, top-end, top-start
  std::array<PlanePoint, 4> v{};
  Orientation orientation = Orientation::a;
  std::size_t seq_index = 0;
};

// Trapezoid on the base start -> start + d. The top lies to the left of d for
// rotations (a, c, e) and to the right for reflections (b, d, f). Both
// components of d must be divisible by 3 with dx + dy3 even.
Trapezoid make_trapezoid(PlanePoint start, PlanePoint d, Orientation o, std::size_t seq_index = 0);

// Trapezoid m spans the projections of walk points m and m + 1 with
// orientation psi(w[m]) (0-based). `scale` multiplies every step.
std::vector<Trapezoid> trapezoid_chain(const Word& w, PlanePoint origin = {}, int64_t scale = 1);
std::vector<Trapezoid> trapezoid_chain(const std::vector<Orientation>& seq, PlanePoint origin = {},
                                       int64_t scale = 1);

// Closed point-in-convex-polygon test.
bool contains(const Trapezoid& t, const PlanePoint& p);

// Closed convex polygons share a point (separating axis over all 8 edges).
bool intersects(const Trapezoid& a, const Trapezoid& b);

namespace detail {

template <NumberSystem N>
struct Vec {
  N x;
  N y;
};

template <NumberSystem N>
Vec<N> lift(const PlanePoint& p) {
  return {N::from_int(p.x), N::from_rt3(p.y3)};
}

template <NumberSystem N>
N dot(const Vec<N>& u, const Vec<N>& w) {
  return u.x * w.x + u.y * w.y;
}

template <NumberSystem N>
N cross(const Vec<N>& u, const Vec<N>& w) {
  return u.x * w.y - u.y * w.x;
}

template <NumberSystem N>
Vec<N> sub(const Vec<N>& a, const Vec<N>& b) {
  return {a.x - b.x, a.y - b.y};
}

// Squared distance from p to the closed segment ab.
template <NumberSystem N>
Ratio<N> point_segment_sq(const Vec<N>& p, const Vec<N>& a, const Vec<N>& b) {
  const Vec<N> u = sub(b, a);
  const Vec<N> w = sub(p, a);
  const N t = dot(u, w);
  if (sign(t) <= 0) return Ratio<N>::of(dot(w, w));
  const N len = dot(u, u);
  if (sign(t - len) >= 0) {
    const Vec<N> e = sub(p, b);
    return Ratio<N>::of(dot(e, e));
  }
  const N c = cross(u, w);
  return {c * c, len};
}

template <NumberSystem N>
bool separated_by_edges(const std::array<Vec<N>, 4>& a, const std::array<Vec<N>, 4>& b) {
  for (int e = 0; e < 4; ++e) {
    const Vec<N> edge = sub(a[(e + 1) % 4], a[e]);
    const int inside = sign(cross(edge, sub(a[(e + 2) % 4], a[e])));
    bool all_out = true;
    for (const auto& q : b) {
      if (sign(cross(edge, sub(q, a[e]))) * inside >= 0) {
        all_out = false;
        break;
      }
    }
    if (all_out) return true;
  }
  return false;
}

template <NumberSystem N>
std::array<Vec<N>, 4> lift(const Trapezoid& t) {
  return {lift<N>(t.v[0]), lift<N>(t.v[1]), lift<N>(t.v[2]), lift<N>(t.v[3])};
}

}  // namespace detail

// Squared distance between closed trapezoids; zero when they touch.
template <NumberSystem N = Rt3Num>
Ratio<N> min_dist_sq(const Trapezoid& t1, const Trapezoid& t2) {
  const auto a = detail::lift<N>(t1);
  const auto b = detail::lift<N>(t2);
  if (!detail::separated_by_edges(a, b) && !detail::separated_by_edges(b, a)) return Ratio<N>::of(N::from_int(0));
  Ratio<N> best = detail::point_segment_sq(a[0], b[0], b[1]);
  auto consider = [&](const Ratio<N>& r) {
    if (cmp_ratio(r, best) < 0) best = r;
  };
  for (int p = 0; p < 4; ++p) {
    for (int e = 0; e < 4; ++e) {
      consider(detail::point_segment_sq(a[p], b[e], b[(e + 1) % 4]));
      consider(detail::point_segment_sq(b[p], a[e], a[(e + 1) % 4]));
    }
  }
  return best;
}

// Squared distance between the farthest pair of vertices.
template <NumberSystem N = Rt3Num>
N max_dist_sq(const Trapezoid& t1, const Trapezoid& t2) {
  const auto a = detail::lift<N>(t1);
  const auto b = detail::lift<N>(t2);
  N best = N::from_int(0);
  for (const auto& p : a) {
    for (const auto& q : b) {
      const auto d = detail::sub(p, q);
      const N v = detail::dot(d, d);
      if (sign(v - best) > 0) best = v;
    }
  }
  return best;
}

// Order-n trapezoids of the walk for n >= 0: trapezoid m spans walk points
// m * 7^n and (m + 1) * 7^n, with orientation psi(lambda[m]) (0-based).
std::vector<Trapezoid> order_n_chain(int order, std::size_t count);

}  // namespace swalk
