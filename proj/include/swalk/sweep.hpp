#pragma once

// Largest number of chain trapezoids within a bounded index span that a
// single straight line meets.
//
// A stabbing line can always be moved, without losing any trapezoid, until
// it passes through a vertex of one of them. So it suffices to rotate a line
// about every vertex (the pivot) of every trapezoid and count, for each index
// window containing the pivot's trapezoid, how many trapezoids the line
// touches. Counts per window live in a segment tree.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swalk/orientation.hpp"
#include "swalk/trapezoid.hpp"

namespace swalk {

// Range add and global maximum over a fixed number of counters.
class WindowTree {
 public:
  explicit WindowTree(std::size_t size = 1);

  void reset();
  // Adds delta to counters lo..hi (inclusive).
  void add(std::size_t lo, std::size_t hi, int delta);
  int max() const { return max_[1]; }
  // Index of some counter holding the maximum.
  std::size_t argmax() const;
  std::size_t size() const { return size_; }

 private:
  void add(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo, std::size_t hi, int delta);

  std::size_t size_;
  std::vector<int> max_;
  std::vector<int> pending_;
};

enum class SweepLine {
  full,  // lines through the pivot
  ray,   // half-lines starting at the pivot
};

enum class NormalizationRule {
  isometry,    // left action of the orientation group
  tabulated,   // fixed composition table kTabulated, row g, column x; not a group action on chains
  none,
};

struct SweepHit {
  int count = 0;
  std::size_t pivot_trapezoid = 0;  // index in the chain
  int pivot_vertex = 0;             // 0..3
  PlanePoint pivot;
  PlanePoint direction;
  std::size_t window_start = 0;  // first chain index of the best window, clipped at 0
};

// Every vertex of every trapezoid of `chain` as pivot; windows are sets of
// trapezoids whose indices differ by at most `span`.
SweepHit sweep_chain(const std::vector<Trapezoid>& chain, std::size_t span, SweepLine mode = SweepLine::full);

// Same, for the four vertices of trapezoid `center` only.
SweepHit sweep_pivot_trapezoid(const std::vector<Trapezoid>& chain, std::size_t center, std::size_t span,
                               SweepLine mode = SweepLine::full);

// Reference count: every line through two vertices of trapezoids at most
// `span` apart, tested against every trapezoid.
int brute_force_chain(const std::vector<Trapezoid>& chain, std::size_t span);

// Closed trapezoid meets the infinite line through p with direction d.
bool line_meets(const Trapezoid& t, const PlanePoint& p, const PlanePoint& d);

std::vector<Orientation> normalize_with(NormalizationRule rule, const std::vector<Orientation>& seq);

// Entry of kTabulated at row g, column x.
Orientation tabulated_product(Orientation g, Orientation x);

struct DistinctContext {
  std::size_t start = 0;  // 1-based start of the lambda window
  std::vector<Orientation> normalized;
};

// Distinct normalized orientation sequences psi(lambda[s : s + length - 1])
// over all windows of lambda, in order of first occurrence.
std::vector<DistinctContext> distinct_normalized_windows(std::size_t length, NormalizationRule rule);

struct StabbingOptions {
  SweepLine mode = SweepLine::full;
  NormalizationRule rule = NormalizationRule::isometry;
  unsigned workers = 1;
};

struct StabbingReport {
  std::size_t window = 0;
  std::size_t span = 0;
  std::size_t contexts = 0;
  int max = 0;
  std::size_t context_start = 0;  // 1-based lambda start of the witness context
  std::vector<Orientation> context;  // normalized orientations of the witness
  SweepHit hit;                     // chain indices relative to the context
};

// Windows are sets of trapezoids with index difference at most `span`. The
// pivot trapezoid is the centre of a context of 2 * span + 1 trapezoids.
StabbingReport max_intersected_span(std::size_t span, const StabbingOptions& opt = {});

// Trapezoids whose first and last index differ by at most `window`, so a
// window of w admits w + 1 consecutive trapezoids and window 0 a single one.
StabbingReport max_intersected(std::size_t window, const StabbingOptions& opt = {});

// Oracle on the first `prefix` trapezoids of the lambda chain, window as above.
int brute_force_max_intersected(std::size_t window, std::size_t prefix);

// Sweep over the same prefix chain.
int sweep_max_intersected(std::size_t window, std::size_t prefix);

}  // namespace swalk
