#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "swalk/errors.hpp"
#include "swalk/walk.hpp"

using namespace swalk;

namespace {

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  const Point3 u = b - a, v = c - a;
  return u.y * v.z - u.z * v.y == 0 && u.z * v.x - u.x * v.z == 0 && u.x * v.y - u.y * v.x == 0;
}

struct Best {
  std::size_t count = 0;
  std::vector<std::size_t> witness;
};

// Cubic reference: every pair spans a line; collect the points on it and
// slide an index window of width `window` over them.
Best brute_collinear(const std::vector<Point3>& pts, std::size_t start, std::size_t end, std::size_t window) {
  Best best;
  best.count = end >= start ? 1 : 0;
  best.witness = {start};
  for (std::size_t p = start; p <= end; ++p) {
    for (std::size_t q = p + 1; q <= end && q - p < window; ++q) {
      if (pts[p] == pts[q]) continue;
      std::vector<std::size_t> on;
      for (std::size_t r = start; r <= end; ++r) {
        if (collinear(pts[p], pts[q], pts[r])) on.push_back(r);
      }
      for (std::size_t a = 0; a < on.size(); ++a) {
        std::size_t b = a;
        while (b + 1 < on.size() && on[b + 1] - on[a] < window) ++b;
        std::vector<std::size_t> cand(on.begin() + a, on.begin() + b + 1);
        if (cand.size() > best.count || (cand.size() == best.count && cand < best.witness)) {
          best.count = cand.size();
          best.witness = cand;
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("walk points") {
  const auto z = walk_prefix(200);
  CHECK(z[0] == Point3{0, 0, 0});
  CHECK(z[1] == Point3{1, 0, 0});
  CHECK(z[2] == Point3{1, 1, 0});
  CHECK(z[109] == Point3{46, 40, 23});
  CHECK(z[185] == Point3{84, 59, 42});
  CHECK(z[7] == Point3{5, 1, 1});
  CHECK(to_string(z[109]) == "(46,40,23)");
}

TEST_CASE("norms") {
  CHECK(perp_norm_sq({1, 1, 1}) == 0);
  CHECK(perp_norm_sq({1, 0, 0}) == 1);
  CHECK(perp_norm_sq({2, -1, 0}) == 7);
  CHECK(parallel_norm({3, -1, 4}) == 6);
}

TEST_CASE("displacement norms along the walk") {
  // Smallest and largest perpendicular norms for index gaps 1..6.
  const int64_t lo[] = {1, 1, 3, 1, 1, 3};
  const int64_t hi[] = {1, 4, 3, 7, 13, 12};
  const auto z = walk_prefix(10006);
  for (std::size_t c = 1; c <= 6; ++c) {
    wide mn = 1000, mx = 0;
    for (std::size_t k = 0; k + c < z.size(); ++k) {
      const Point3 d = z[k + c] - z[k];
      REQUIRE(parallel_norm(d) == static_cast<int64_t>(c));
      mn = std::min(mn, perp_norm_sq(d));
      mx = std::max(mx, perp_norm_sq(d));
    }
    CAPTURE(c);
    CHECK(mn == lo[c - 1]);
    CHECK(mx == hi[c - 1]);
  }
}

TEST_CASE("canonical lines") {
  const auto l = canonical_line({0, 0, 0}, {2, 4, 6});
  CHECK(l.dir == Point3{1, 2, 3});
  CHECK(l.base == Point3{0, 0, 0});
  const auto m = canonical_line({5, 3, 1}, {1, 3, 5});
  CHECK(m.dir == Point3{1, 0, -1});
  CHECK(m.base == Point3{0, 3, 6});
  CHECK(canonical_line({0, -3, 7}, {0, 1, 7}).dir == Point3{0, 1, 0});
  CHECK(canonical_line({0, -3, 7}, {0, 1, 7}).base == Point3{0, 0, 7});
  CHECK_THROWS_AS(canonical_line({1, 1, 1}, {1, 1, 1}), DomainError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int64_t> d(-40, 40);
  for (int t = 0; t < 3000; ++t) {
    const Point3 p{d(rng), d(rng), d(rng)};
    const Point3 v{d(rng), d(rng), d(rng)};
    if (v == Point3{}) continue;
    const int64_t a = d(rng) % 5, b = d(rng) % 5;
    if (a == b) continue;
    const Point3 pa{p.x + a * v.x, p.y + a * v.y, p.z + a * v.z};
    const Point3 pb{p.x + b * v.x, p.y + b * v.y, p.z + b * v.z};
    const auto ref = canonical_line(p, p + v);
    CHECK(canonical_line(pa, pb) == ref);
    CHECK(canonical_line(p + v, p) == ref);
    CHECK(ref.contains(pa));
    CHECK(ref.contains(ref.base));
    const Point3 q{d(rng), d(rng), d(rng)};
    CHECK(ref.contains(q) == collinear(p, p + v, q));
  }
}

TEST_CASE("collinear count matches the cubic reference, unrestricted") {
  const auto z = walk_prefix(300);
  for (std::size_t end = 1; end <= 300; end += (end < 60 ? 1 : 37)) {
    CAPTURE(end);
    const Best ref = brute_collinear(z, 0, end, end + 1);
    const auto got = count_max_collinear(0, end, end + 1);
    CHECK(got.max_points == ref.count);
    CHECK(got.witness_indices == ref.witness);
  }
}

TEST_CASE("collinear count matches the cubic reference, windowed") {
  const auto z = walk_prefix(260);
  for (std::size_t window : {2, 3, 7, 20, 50, 120}) {
    for (std::size_t start : {0, 13, 60}) {
      const std::size_t end = 250;
      CAPTURE(window);
      CAPTURE(start);
      const Best ref = brute_collinear(z, start, end, window);
      const auto got = count_max_collinear(start, end, window);
      CHECK(got.max_points == ref.count);
      CHECK(got.witness_indices == ref.witness);
      CHECK(count_max_collinear(z, start, end, window).witness_indices == got.witness_indices);
      for (std::size_t idx : got.witness_indices) CHECK(got.witness_line.contains(z[idx]));
    }
  }
}

TEST_CASE("six collinear points among the first 200") {
  const auto r = count_max_collinear(0, 200, 16807);
  CHECK(r.max_points == 6);
  CHECK(r.witness_indices == std::vector<std::size_t>{109, 113, 145, 149, 181, 185});
}

TEST_CASE("chunk plan") {
  CHECK(chunk_plan(10, 3, 6) == std::vector<ChunkRange>{{0, 6}, {4, 10}});
  CHECK(chunk_plan(5, 2, 10) == std::vector<ChunkRange>{{0, 5}});
  CHECK(chunk_plan(20, 4, 8) == std::vector<ChunkRange>{{0, 8}, {5, 13}, {10, 18}, {15, 20}});
  CHECK_THROWS_AS(chunk_plan(100, 10, 19), DomainError);
  CHECK_THROWS_AS(chunk_plan(100, 1, 19), DomainError);

  // Every index span below the window sits inside some chunk.
  for (std::size_t window : {2, 5, 9}) {
    const auto plan = chunk_plan(200, window, 2 * window + 3);
    for (std::size_t s = 0; s + window - 1 <= 200; ++s) {
      const bool covered = std::any_of(plan.begin(), plan.end(), [&](const ChunkRange& c) {
        return c.start <= s && s + window - 1 <= c.end;
      });
      CHECK(covered);
    }
  }
}

TEST_CASE("chunked and unchunked runs agree") {
  const std::size_t total = 3000, window = 200;
  const auto whole = count_max_collinear(0, total, window);
  std::vector<ChunkResult> seen;
  const auto results = run_chunks(chunk_plan(total, window, 450), window, 2,
                                  [&](const ChunkResult& r) { seen.push_back(r); });
  CHECK(seen.size() == results.size());
  const auto merged = merge_chunk_results(results);
  CHECK(merged.max_points == whole.max_points);
  CHECK(merged.witness_indices == whole.witness_indices);

  std::stringstream io;
  for (const auto& r : results) io << to_json_line(r) << "\n";
  const auto back = read_chunk_results(io);
  REQUIRE(back.size() == results.size());
  for (std::size_t t = 0; t < back.size(); ++t) {
    CHECK(back[t].start == results[t].start);
    CHECK(back[t].end == results[t].end);
    CHECK(back[t].max_points == results[t].max_points);
    CHECK(back[t].witness_indices == results[t].witness_indices);
  }
  std::vector<ChunkResult> reversed_order(results.rbegin(), results.rend());
  CHECK(merge_chunk_results(reversed_order).witness_indices == merged.witness_indices);
  CHECK_THROWS_AS(chunk_result_from_json("{\"start\": 1}"), DomainError);
}

TEST_CASE("merge tie-breaking") {
  const std::vector<ChunkResult> rs = {{0, 10, 4, {3, 5, 7, 9}}, {8, 20, 4, {2, 5, 7, 9}}, {15, 30, 3, {0, 1, 2}}};
  const auto m = merge_chunk_results(rs);
  CHECK(m.max_points == 4);
  CHECK(m.witness_indices == std::vector<std::size_t>{2, 5, 7, 9});
}

TEST_CASE("walk prefix respects the memory budget") {
  const std::size_t saved = memory_budget();
  set_memory_budget(4096);
  CHECK_THROWS_AS(walk_prefix(100000), ResourceLimitError);
  set_memory_budget(saved);
}
