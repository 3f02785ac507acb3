#include "swalk/walk.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "swalk/errors.hpp"

namespace swalk {

namespace {

int64_t coord(const Point3& p, int axis) { return axis == 0 ? p.x : axis == 1 ? p.y : p.z; }

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool parallel(const Point3& u, const Point3& v) {
  return checked_mul(u.y, v.z) == checked_mul(u.z, v.y) && checked_mul(u.z, v.x) == checked_mul(u.x, v.z) &&
         checked_mul(u.x, v.y) == checked_mul(u.y, v.x);
}

uint64_t mix(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::vector<std::size_t> points_on_line(const std::vector<Point3>& pts, std::size_t anchor, std::size_t other,
                                        std::size_t lo, std::size_t hi) {
  const Point3 d = pts[other] - pts[anchor];
  std::vector<std::size_t> out;
  for (std::size_t r = lo; r <= hi; ++r) {
    if (r == anchor || parallel(pts[r] - pts[anchor], d)) out.push_back(r);
  }
  return out;
}

std::size_t triangular_root(uint64_t t) {
  // m with m(m-1)/2 = t
  uint64_t disc = 1 + 8 * t;
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(disc)));
  while (r * r > disc) --r;
  while ((r + 1) * (r + 1) <= disc) ++r;
  if (r * r != disc) throw std::logic_error("pair count is not triangular");
  return static_cast<std::size_t>((1 + r) / 2);
}

// Every pair in [start, end] is within the window, so each line's pair
// counter is complete and the point count follows from it.
CollinearReport all_pairs(const std::vector<Point3>& pts, std::size_t start, std::size_t end) {
  struct Entry {
    uint64_t pairs = 0;
    std::size_t p = 0;
    std::size_t q = 0;
  };
  const std::size_t n = end - start + 1;
  const std::size_t pair_count = n * (n - 1) / 2;
  require_budget(pair_count * 96, "collinear pair map");

  std::unordered_map<CanonicalLine, Entry, CanonicalLineHash> lines;
  lines.reserve(std::min<std::size_t>(pair_count, 1u << 22));
  for (std::size_t p = start; p < end; ++p) {
    for (std::size_t q = p + 1; q <= end; ++q) {
      auto [it, fresh] = lines.try_emplace(canonical_line(pts[p], pts[q]));
      if (fresh) {
        it->second.p = p;
        it->second.q = q;
      }
      ++it->second.pairs;
    }
  }

  const CanonicalLine* best_line = nullptr;
  const Entry* best = nullptr;
  for (const auto& [line, e] : lines) {
    if (!best || e.pairs > best->pairs ||
        (e.pairs == best->pairs && std::pair(e.p, e.q) < std::pair(best->p, best->q))) {
      best = &e;
      best_line = &line;
    }
  }
  CollinearReport out;
  out.max_points = triangular_root(best->pairs);
  out.witness_line = *best_line;
  out.witness_indices = points_on_line(pts, best->p, best->q, start, end);
  if (out.witness_indices.size() != out.max_points) throw std::logic_error("witness size mismatch");
  return out;
}

// For each anchor p, count points q in (p, p + window) by their direction
// from z_p. Walk coordinates are nondecreasing, so with s = q - p > 0 the
// direction is identified by (dx / s, dy / s). Both quotients are correctly
// rounded doubles; two different fractions with denominators below 2^26 differ
// by more than 2^-52, so equal keys mean equal directions.
class AnchoredCounter {
 public:
  explicit AnchoredCounter(std::size_t window) {
    std::size_t cap = std::bit_ceil(std::max<std::size_t>(64, window * 2));
    require_budget(cap * sizeof(Slot), "collinear window table");
    slots_.resize(cap);
    mask_ = cap - 1;
  }

  // Returns (count including p, first q) of the best direction at p; ties
  // keep the smallest first q.
  std::pair<std::size_t, std::size_t> run(const std::vector<Point3>& pts, std::size_t p, std::size_t last) {
    if (++stamp_ == 0) {
      for (auto& s : slots_) s.stamp = 0;
      stamp_ = 1;
    }
    const Point3 zp = pts[p];
    std::size_t best_count = 0;
    std::size_t best_q = 0;
    for (std::size_t q = p + 1; q <= last; ++q) {
      const double s = static_cast<double>(q - p);
      const double kx = static_cast<double>(pts[q].x - zp.x) / s;
      const double ky = static_cast<double>(pts[q].y - zp.y) / s;
      uint64_t bx, by;
      std::memcpy(&bx, &kx, 8);
      std::memcpy(&by, &ky, 8);
      std::size_t slot = mix(bx * 0x9e3779b97f4a7c15ULL ^ by) & mask_;
      for (;;) {
        Slot& e = slots_[slot];
        if (e.stamp != stamp_) {
          e = {bx, by, stamp_, 1, static_cast<uint32_t>(q - p)};
          if (best_count == 0) {
            best_count = 1;
            best_q = q;
          }
          break;
        }
        if (e.kx == bx && e.ky == by) {
          ++e.count;
          const std::size_t fq = p + e.first;
          if (e.count > best_count || (e.count == best_count && fq < best_q)) {
            best_count = e.count;
            best_q = fq;
          }
          break;
        }
        slot = (slot + 1) & mask_;
      }
    }
    return {best_count + 1, best_q};
  }

 private:
  struct Slot {
    uint64_t kx = 0;
    uint64_t ky = 0;
    uint32_t stamp = 0;
    uint32_t count = 0;
    uint32_t first = 0;
  };
  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  uint32_t stamp_ = 0;
};

CollinearReport anchored(const std::vector<Point3>& pts, std::size_t start, std::size_t end, std::size_t window) {
  if (window > (std::size_t{1} << 26)) throw ResourceLimitError("window too large for anchored counting");
  AnchoredCounter counter(window);
  std::size_t best = 0, best_p = 0, best_q = 0;
  for (std::size_t p = start; p < end; ++p) {
    const std::size_t last = std::min(end, p + window - 1);
    auto [count, q] = counter.run(pts, p, last);
    if (count > best) {
      best = count;
      best_p = p;
      best_q = q;
    }
  }
  CollinearReport out;
  out.max_points = best;
  out.witness_line = canonical_line(pts[best_p], pts[best_q]);
  out.witness_indices = points_on_line(pts, best_p, best_q, best_p, std::min(end, best_p + window - 1));
  if (out.witness_indices.size() != best) throw std::logic_error("witness size mismatch");
  return out;
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string to_string(const Point3& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

Point3 unit(Step s) {
  switch (s) {
    case Step::i: return {1, 0, 0};
    case Step::j: return {0, 1, 0};
    case Step::k: return {0, 0, 1};
  }
  return {};
}

wide perp_norm_sq(const Point3& v) {
  wide sq = checked_add(checked_add(checked_mul(v.x, v.x), checked_mul(v.y, v.y)), checked_mul(v.z, v.z));
  wide mixed = checked_add(checked_add(checked_mul(v.x, v.y), checked_mul(v.y, v.z)), checked_mul(v.z, v.x));
  return checked_sub(sq, mixed);
}

std::vector<Point3> walk_prefix(std::size_t n) {
  if (n >= memory_budget() / sizeof(Point3)) throw ResourceLimitError("walk prefix of " + std::to_string(n) + " steps");
  require_budget((n + 1) * sizeof(Point3), "walk prefix");
  std::vector<Point3> out;
  out.reserve(n + 1);
  out.push_back({});
  if (n == 0) return out;
  LambdaCursor cursor;
  Point3 z{};
  for (std::size_t p = 1; p <= n; ++p) {
    Symbol s = p == 1 ? cursor.current() : cursor.next();
    z = z + unit(phi(s));
    out.push_back(z);
  }
  return out;
}

bool CanonicalLine::contains(const Point3& r) const { return parallel(r - base, dir); }

std::size_t CanonicalLineHash::operator()(const CanonicalLine& l) const noexcept {
  uint64_t h = 0;
  for (int64_t v : {l.dir.x, l.dir.y, l.dir.z, l.base.x, l.base.y, l.base.z}) {
    h = mix(h ^ static_cast<uint64_t>(v)) + 0x9e3779b97f4a7c15ULL;
  }
  return static_cast<std::size_t>(h);
}

CanonicalLine canonical_line(const Point3& p, const Point3& q) {
  if (p == q) throw DomainError("line through a single point");
  Point3 d{checked_narrow(checked_sub(q.x, p.x)), checked_narrow(checked_sub(q.y, p.y)),
           checked_narrow(checked_sub(q.z, p.z))};
  const int64_t g = std::gcd(std::gcd(d.x, d.y), d.z);
  d = {d.x / g, d.y / g, d.z / g};
  const int axis = d.x != 0 ? 0 : d.y != 0 ? 1 : 2;
  if (coord(d, axis) < 0) d = {-d.x, -d.y, -d.z};
  const int64_t t = floor_div(coord(p, axis), coord(d, axis));
  Point3 base{checked_narrow(checked_sub(p.x, checked_mul(t, d.x))),
              checked_narrow(checked_sub(p.y, checked_mul(t, d.y))),
              checked_narrow(checked_sub(p.z, checked_mul(t, d.z)))};
  return {d, base};
}

CollinearReport count_max_collinear(const std::vector<Point3>& points, std::size_t start, std::size_t end,
                                    std::size_t window) {
  if (start >= end) throw DomainError("collinear range needs start < end");
  if (window < 2) throw DomainError("window must be at least 2");
  if (end >= points.size()) throw DomainError("range exceeds the materialized walk");
  if (end - start < window) return all_pairs(points, start, end);
  return anchored(points, start, end, window);
}

CollinearReport count_max_collinear(std::size_t start, std::size_t end, std::size_t window) {
  return count_max_collinear(walk_prefix(end), start, end, window);
}

std::vector<ChunkRange> chunk_plan(std::size_t total, std::size_t window, std::size_t chunk) {
  if (window < 2) throw DomainError("window must be at least 2");
  if (chunk < 2 * window) throw DomainError("chunk must be at least twice the window");
  std::vector<ChunkRange> plan;
  for (std::size_t s = 0;; s += chunk - window + 1) {
    const std::size_t e = std::min(s + chunk, total);
    plan.push_back({s, e});
    if (e == total) break;
  }
  return plan;
}

std::vector<ChunkResult> run_chunks(const std::vector<ChunkRange>& plan, std::size_t window, unsigned workers,
                                    const std::function<void(const ChunkResult&)>& on_result) {
  std::vector<ChunkResult> results(plan.size());
  if (plan.empty()) return results;
  std::size_t total = 0;
  for (const auto& r : plan) total = std::max(total, r.end);
  const std::vector<Point3> pts = walk_prefix(total);

  std::atomic<std::size_t> next{0};
  std::mutex report_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t n; (n = next.fetch_add(1)) < plan.size();) {
        CollinearReport rep = count_max_collinear(pts, plan[n].start, plan[n].end, window);
        results[n] = {plan[n].start, plan[n].end, rep.max_points, std::move(rep.witness_indices)};
        if (on_result) {
          std::lock_guard lock(report_mutex);
          on_result(results[n]);
        }
      }
    } catch (...) {
      std::lock_guard lock(report_mutex);
      if (!failure) failure = std::current_exception();
      next = plan.size();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(plan.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

ChunkResult merge_chunk_results(const std::vector<ChunkResult>& results) {
  if (results.empty()) throw DomainError("nothing to merge");
  ChunkResult best = results.front();
  best.start = results.front().start;
  best.end = results.front().end;
  for (const auto& r : results) {
    best.start = std::min(best.start, r.start);
    best.end = std::max(best.end, r.end);
  }
  for (const auto& r : results) {
    if (r.max_points > best.max_points ||
        (r.max_points == best.max_points && lex_less(r.witness_indices, best.witness_indices))) {
      best.max_points = r.max_points;
      best.witness_indices = r.witness_indices;
    }
  }
  return best;
}

std::string to_json_line(const ChunkResult& r) {
  nlohmann::json j = {{"start", r.start},
                      {"end", r.end},
                      {"max_points", r.max_points},
                      {"witness_indices", r.witness_indices}};
  return j.dump();
}

ChunkResult chunk_result_from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    return {j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>(), j.at("max_points").get<std::size_t>(),
            j.at("witness_indices").get<std::vector<std::size_t>>()};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad chunk record: ") + e.what());
  }
}

std::vector<ChunkResult> read_chunk_results(std::istream& in) {
  std::vector<ChunkResult> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(chunk_result_from_json(line));
  }
  return out;
}

}  // namespace swalk
