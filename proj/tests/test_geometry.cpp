#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "swalk/errors.hpp"
#include "swalk/trapezoid.hpp"

using namespace swalk;

namespace {

struct Fp {
  double x, y;
};

Fp fp(const PlanePoint& p) { return {static_cast<double>(p.x), static_cast<double>(p.y3) * std::sqrt(3.0)}; }

double dist2(Fp a, Fp b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

Fp along(Fp a, Fp b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

// Distance between two segments by nested ternary search on the (convex)
// squared distance of their parametrizations.
double segment_gap2(Fp a0, Fp a1, Fp b0, Fp b1) {
  auto inner = [&](double s) {
    const Fp p = along(a0, a1, s);
    double lo = 0, hi = 1;
    for (int it = 0; it < 100; ++it) {
      const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (dist2(p, along(b0, b1, m1)) < dist2(p, along(b0, b1, m2))) hi = m2; else lo = m1;
    }
    return dist2(p, along(b0, b1, (lo + hi) / 2));
  };
  double lo = 0, hi = 1;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (inner(m1) < inner(m2)) hi = m2; else lo = m1;
  }
  return inner((lo + hi) / 2);
}

double float_min(const Trapezoid& a, const Trapezoid& b) {
  if (intersects(a, b)) return 0;
  double best = INFINITY;
  for (int e = 0; e < 4; ++e) {
    for (int f = 0; f < 4; ++f) {
      best = std::min(best, segment_gap2(fp(a.v[e]), fp(a.v[(e + 1) % 4]), fp(b.v[f]), fp(b.v[(f + 1) % 4])));
    }
  }
  return best;
}

// Dense boundary sampling.
double float_max(const Trapezoid& a, const Trapezoid& b) {
  double best = 0;
  const int samples = 40;
  for (int e = 0; e < 4; ++e) {
    for (int f = 0; f < 4; ++f) {
      for (int s = 0; s <= samples; ++s) {
        for (int t = 0; t <= samples; ++t) {
          best = std::max(best, dist2(along(fp(a.v[e]), fp(a.v[(e + 1) % 4]), double(s) / samples),
                                      along(fp(b.v[f]), fp(b.v[(f + 1) % 4]), double(t) / samples)));
        }
      }
    }
  }
  return best;
}

Trapezoid shifted(Trapezoid t, PlanePoint d) {
  for (auto& v : t.v) v = v + d;
  return t;
}

}  // namespace

TEST_CASE("step projections") {
  CHECK(project_step(Step::i) == PlanePoint{6, 0});
  CHECK(project_step(Step::j) == PlanePoint{-3, 3});
  CHECK(project_step(Step::k) == PlanePoint{-3, -3});
  CHECK(project({1, 1, 1}) == PlanePoint{0, 0});
  CHECK(project({5, 1, 1}) == PlanePoint{24, 0});
  CHECK(plane_norm_sq({-3, 3}) == 36);
  CHECK(base_step(Orientation::a) == Step::i);
  CHECK(base_step(Orientation::d) == Step::j);
  CHECK(base_step(Orientation::f) == Step::k);
}

TEST_CASE("order-0 trapezoid shape") {
  const Trapezoid a = make_trapezoid({0, 0}, {6, 0}, Orientation::a);
  CHECK(a.v[0] == PlanePoint{0, 0});
  CHECK(a.v[1] == PlanePoint{6, 0});
  CHECK(a.v[2] == PlanePoint{5, 1});
  CHECK(a.v[3] == PlanePoint{1, 1});
  const Trapezoid b = make_trapezoid({0, 0}, {6, 0}, Orientation::b);
  CHECK(b.v[2] == PlanePoint{5, -1});
  CHECK(b.v[3] == PlanePoint{1, -1});
  CHECK_THROWS_AS(make_trapezoid({0, 0}, {5, 0}, Orientation::a), DomainError);

  for (const auto& t : trapezoid_chain(lambda_prefix(2401))) {
    CHECK(plane_norm_sq(t.v[1] - t.v[0]) == 36);
    CHECK(plane_norm_sq(t.v[2] - t.v[3]) == 16);
    CHECK(plane_norm_sq(t.v[2] - t.v[1]) == 4);
    CHECK(plane_norm_sq(t.v[3] - t.v[0]) == 4);
    CHECK(plane_cross(t.v[1] - t.v[0], t.v[2] - t.v[3]) == 0);
    // signed height: +1 on the left for rotations
    const wide side = plane_cross(t.v[1] - t.v[0], t.v[3] - t.v[0]);
    CHECK(side == (is_rotation(t.orientation) ? 6 : -6));
    CHECK(project_step(base_step(t.orientation)) == t.v[1] - t.v[0]);
  }
}

TEST_CASE("small chains") {
  const auto one = trapezoid_chain(Word{Symbol::i});
  REQUIRE(one.size() == 1);
  CHECK(one[0].v[0] == PlanePoint{0, 0});
  CHECK(one[0].v[1] == PlanePoint{6, 0});

  const Word mi(mu(Symbol::i).begin(), mu(Symbol::i).end());
  const auto seven = trapezoid_chain(mi);
  REQUIRE(seven.size() == 7);
  CHECK(seven[1].v[0] == PlanePoint{6, 0});
  CHECK(seven[1].v[1] == PlanePoint{3, 3});
  std::string ors;
  for (const auto& t : seven) ors.push_back(to_char(t.orientation));
  CHECK(ors == "adaafaa");
  CHECK(seven[6].v[1] == PlanePoint{24, 0});
  for (std::size_t m = 0; m < seven.size(); ++m) CHECK(seven[m].seq_index == m);

  const auto w = lambda_prefix(49);
  const auto chain = trapezoid_chain(w);
  const auto expect = psi(w);
  for (std::size_t m = 0; m < chain.size(); ++m) CHECK(chain[m].orientation == expect[m]);
  CHECK(trapezoid_chain(psi(w)).back().v[1] == chain.back().v[1]);
}

TEST_CASE("distance examples") {
  const Trapezoid t = make_trapezoid({0, 0}, {6, 0}, Orientation::a);
  const Trapezoid u = make_trapezoid({12, 0}, {6, 0}, Orientation::a);
  CHECK(cmp_ratio(min_dist_sq(t, t), Rt3Ratio::of(Rt3Num{})) == 0);
  CHECK(cmp_ratio(min_dist_sq(t, u), Rt3Ratio::of(Rt3Num(36, 0))) == 0);
  CHECK(max_dist_sq(t, t) == Rt3Num(36, 0));
  CHECK(max_dist_sq(t, u) == Rt3Num(324, 0));
  const auto chain = trapezoid_chain(lambda_prefix(100));
  for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
    CHECK(intersects(chain[m], chain[m + 1]));
    CHECK(sign(min_dist_sq(chain[m], chain[m + 1]).num) == 0);
  }
  // Point in the middle of a leg: the foot is interior, giving a fraction.
  const Trapezoid far = make_trapezoid({6, 6}, {6, 0}, Orientation::b);
  const auto r = min_dist_sq(t, far);
  CHECK(r.approx() == doctest::Approx(float_min(t, far)).epsilon(1e-9));
}

TEST_CASE("self-similar fit") {
  for (Symbol s : kAllSymbols) {
    CAPTURE(token(s));
    const Word img(mu(s).begin(), mu(s).end());
    const auto chain = trapezoid_chain(img);
    const PlanePoint end = chain.back().v[1];
    const Trapezoid big = make_trapezoid({0, 0}, end, psi(s));
    CHECK(plane_norm_sq(end) == 16 * 36);
    for (const auto& t : chain) {
      for (const auto& v : t.v) CHECK(contains(big, v));
    }
  }
}

TEST_CASE("projection law") {
  const auto z = walk_prefix(10000);
  std::vector<PlanePoint> p(z.size());
  for (std::size_t a = 0; a < z.size(); ++a) p[a] = project(z[a]);
  std::size_t bad = 0;
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      if (plane_norm_sq(p[b] - p[a]) != 36 * perp_norm_sq(z[b] - z[a])) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("translation invariance") {
  const Word w = lambda_prefix(20000);
  const auto chain = trapezoid_chain(w);
  std::mt19937_64 rng(17);
  int matched = 0;
  for (int t = 0; t < 300 && matched < 60; ++t) {
    const std::size_t m = 1 + rng() % 30;
    const std::size_t j = rng() % 3000;
    for (std::size_t k = j + 1; k + m < w.size(); ++k) {
      if (!std::equal(w.begin() + j, w.begin() + j + m + 1, w.begin() + k)) continue;
      ++matched;
      CHECK(cmp_ratio(min_dist_sq(chain[j], chain[j + m]), min_dist_sq(chain[k], chain[k + m])) == 0);
      CHECK(max_dist_sq(chain[j], chain[j + m]) == max_dist_sq(chain[k], chain[k + m]));
      break;
    }
  }
  CHECK(matched >= 30);
}

TEST_CASE("floating oracle agreement") {
  const auto chain = trapezoid_chain(lambda_prefix(3000));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t a = rng() % chain.size();
    const std::size_t b = (a + 1 + rng() % 60) % chain.size();
    const double exact_min = min_dist_sq(chain[a], chain[b]).approx();
    const double exact_max = max_dist_sq(chain[a], chain[b]).approx();
    const double fmin = float_min(chain[a], chain[b]);
    const double fmax = float_max(chain[a], chain[b]);
    if (exact_min == 0) {
      CHECK(fmin < 1e-9);
    } else {
      CHECK(std::fabs(exact_min - fmin) <= 1e-6 * exact_min);
    }
    CHECK(std::fabs(exact_max - fmax) <= 1e-6 * exact_max);
    CHECK(exact_max >= exact_min);
    CHECK(cmp_ratio(min_dist_sq(chain[a], chain[b]), min_dist_sq(chain[b], chain[a])) == 0);
    CHECK(max_dist_sq(chain[a], chain[b]) == max_dist_sq(chain[b], chain[a]));
  }
}

TEST_CASE("relabeled chains are congruent") {
  const auto seq = psi(lambda_prefix(40));
  const auto ref = trapezoid_chain(seq);
  for (Orientation g : kAllOrientations) {
    const auto other = trapezoid_chain(act(g, seq));
    for (std::size_t a = 0; a < ref.size(); ++a) {
      for (std::size_t b = a + 1; b < ref.size(); ++b) {
        CHECK(cmp_ratio(min_dist_sq(ref[a], ref[b]), min_dist_sq(other[a], other[b])) == 0);
        CHECK(max_dist_sq(ref[a], ref[b]) == max_dist_sq(other[a], other[b]));
      }
    }
  }
}

TEST_CASE("point containment and intersection") {
  const Trapezoid t = make_trapezoid({0, 0}, {6, 0}, Orientation::a);
  CHECK(contains(t, {3, 0}));
  CHECK(contains(t, {1, 1}));
  CHECK(contains(t, {3, 1}));
  CHECK_FALSE(contains(t, {0, 1}));
  CHECK_FALSE(contains(t, {3, -1}));
  CHECK(intersects(t, shifted(t, {6, 0})));
  CHECK_FALSE(intersects(t, shifted(t, {7, 0})));
  CHECK(intersects(t, shifted(t, {3, 1})));
}

TEST_CASE("floating number system gives the same distances") {
  const auto chain = trapezoid_chain(lambda_prefix(300));
  for (std::size_t a = 0; a < chain.size(); a += 7) {
    for (std::size_t b = a + 2; b < chain.size(); b += 11) {
      CHECK(min_dist_sq<DoubleRep>(chain[a], chain[b]).approx() ==
            doctest::Approx(min_dist_sq(chain[a], chain[b]).approx()).epsilon(1e-12));
      CHECK(max_dist_sq<DoubleRep>(chain[a], chain[b]).approx() ==
            doctest::Approx(max_dist_sq(chain[a], chain[b]).approx()).epsilon(1e-12));
    }
  }
}

TEST_CASE("order-n chains") {
  const auto o0 = order_n_chain(0, 49);
  const auto direct = trapezoid_chain(lambda_prefix(49));
  REQUIRE(o0.size() == direct.size());
  for (std::size_t m = 0; m < o0.size(); ++m) CHECK(o0[m].v == direct[m].v);
  const auto o1 = order_n_chain(1, 7);
  const auto z = walk_prefix(49);
  for (std::size_t m = 0; m < o1.size(); ++m) {
    CHECK(o1[m].v[0] == project(z[7 * m]));
    CHECK(o1[m].v[1] == project(z[7 * (m + 1)]));
    CHECK(plane_norm_sq(o1[m].v[1] - o1[m].v[0]) == 16 * 36);
  }
}
