#pragma once

// The 3D walk z_p and collinear-point counting over index ranges.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "swalk/checked.hpp"
#include "swalk/symbols.hpp"

namespace swalk {

struct Point3 {
  int64_t x = 0;
  int64_t y = 0;
  int64_t z = 0;

  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend bool operator==(const Point3&, const Point3&) = default;
  friend auto operator<=>(const Point3&, const Point3&) = default;
};

std::string to_string(const Point3& p);

Point3 unit(Step s);

// Parallel norm: coordinate sum.
inline int64_t parallel_norm(const Point3& v) { return v.x + v.y + v.z; }

// Squared perpendicular norm x^2 + y^2 + z^2 - xy - yz - zx. Zero exactly
// for multiples of (1,1,1). The geometric length is sqrt(2/3) * sqrt(q).
wide perp_norm_sq(const Point3& v);

// z_0 .. z_n (n + 1 points).
std::vector<Point3> walk_prefix(std::size_t n);

// Unique key for the infinite line through two distinct lattice points.
// dir is primitive with its first nonzero component positive; base is the
// lattice point of the line whose coordinate along the first nonzero axis of
// dir lies in [0, dir[axis]).
struct CanonicalLine {
  Point3 dir;
  Point3 base;

  friend bool operator==(const CanonicalLine&, const CanonicalLine&) = default;
  friend auto operator<=>(const CanonicalLine&, const CanonicalLine&) = default;

  bool contains(const Point3& r) const;
};

struct CanonicalLineHash {
  std::size_t operator()(const CanonicalLine& l) const noexcept;
};

// Throws DomainError when p == q; OverflowError on wrap.
CanonicalLine canonical_line(const Point3& p, const Point3& q);

struct CollinearReport {
  std::size_t max_points = 0;
  CanonicalLine witness_line;
  std::vector<std::size_t> witness_indices;  // ascending walk indices
};

// Largest number of points z_p, start <= p <= end, lying on one line with
// pairwise index gaps below `window`. Ties resolve to the lexicographically
// smallest witness index list.
CollinearReport count_max_collinear(std::size_t start, std::size_t end, std::size_t window);

// Same query over an already materialized walk (`points[0]` is z_0).
CollinearReport count_max_collinear(const std::vector<Point3>& points, std::size_t start, std::size_t end,
                                    std::size_t window);

struct ChunkRange {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  friend bool operator==(const ChunkRange&, const ChunkRange&) = default;
};

// Overlapping ranges [s, s + chunk] stepping by chunk - window + 1, so every
// set of points with span below `window` falls inside one range.
std::vector<ChunkRange> chunk_plan(std::size_t total, std::size_t window, std::size_t chunk);

struct ChunkResult {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t max_points = 0;
  std::vector<std::size_t> witness_indices;
};

// Runs every chunk of the plan on `workers` threads. `on_result` (optional)
// sees each chunk as it completes, serialized.
std::vector<ChunkResult> run_chunks(const std::vector<ChunkRange>& plan, std::size_t window, unsigned workers,
                                    const std::function<void(const ChunkResult&)>& on_result = {});

// Maximum of max_points; ties keep the lexicographically smallest witness.
ChunkResult merge_chunk_results(const std::vector<ChunkResult>& results);

std::string to_json_line(const ChunkResult& r);
ChunkResult chunk_result_from_json(const std::string& line);
std::vector<ChunkResult> read_chunk_results(std::istream& in);

}  // namespace swalk
