#include "swalk/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "swalk/errors.hpp"
#include "swalk/subwords.hpp"
#include "swalk/symbols.hpp"

namespace swalk {

// ---- WindowTree ----

WindowTree::WindowTree(std::size_t size) : size_(std::max<std::size_t>(size, 1)) {
  std::size_t cap = 1;
  while (cap < size_) cap <<= 1;
  max_.assign(2 * cap, 0);
  pending_.assign(2 * cap, 0);
}

void WindowTree::reset() {
  std::fill(max_.begin(), max_.end(), 0);
  std::fill(pending_.begin(), pending_.end(), 0);
}

void WindowTree::add(std::size_t lo, std::size_t hi, int delta) {
  if (lo > hi || hi >= size_) throw DomainError("window tree range out of bounds");
  add(1, 0, size_ - 1, lo, hi, delta);
}

void WindowTree::add(std::size_t node, std::size_t nlo, std::size_t nhi, std::size_t lo, std::size_t hi, int delta) {
  if (hi < nlo || nhi < lo) return;
  if (lo <= nlo && nhi <= hi) {
    pending_[node] += delta;
    max_[node] += delta;
    return;
  }
  const std::size_t mid = nlo + (nhi - nlo) / 2;
  add(2 * node, nlo, mid, lo, hi, delta);
  add(2 * node + 1, mid + 1, nhi, lo, hi, delta);
  max_[node] = pending_[node] + std::max(max_[2 * node], max_[2 * node + 1]);
}

std::size_t WindowTree::argmax() const {
  std::size_t node = 1, nlo = 0, nhi = size_ - 1;
  int want = max_[1];
  while (nlo < nhi) {
    want -= pending_[node];
    const std::size_t mid = nlo + (nhi - nlo) / 2;
    if (max_[2 * node] == want) {
      node = 2 * node;
      nhi = mid;
    } else {
      node = 2 * node + 1;
      nlo = mid + 1;
    }
  }
  return nlo;
}

namespace {

// ---- angular order ----

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half(const PlanePoint& u) { return (u.y3 > 0 || (u.y3 == 0 && u.x > 0)) ? 0 : 1; }

bool angle_less(const PlanePoint& u, const PlanePoint& w) {
  const int hu = half(u), hw = half(w);
  if (hu != hw) return hu < hw;
  return plane_cross(u, w) > 0;
}

bool same_angle(const PlanePoint& u, const PlanePoint& w) { return half(u) == half(w) && plane_cross(u, w) == 0; }

PlanePoint sweep_key(const PlanePoint& d, SweepLine mode) {
  if (mode == SweepLine::full && half(d) == 1) return {-d.x, -d.y3};
  return d;
}

struct Event {
  PlanePoint key;
  uint8_t kind;  // 0 enter, 1 exit
  uint32_t local;  // context-relative index
};

struct PivotScratch {
  WindowTree tree;
  std::vector<Event> events;
};

SweepHit sweep_one(const std::vector<Trapezoid>& chain, std::size_t i0, int vertex, std::size_t span, SweepLine mode,
                   PivotScratch& scratch) {
  const PlanePoint p = chain[i0].v[vertex];
  const auto base = static_cast<int64_t>(i0) - static_cast<int64_t>(span);
  const std::size_t first = i0 > span ? i0 - span : 0;
  const std::size_t last = std::min(chain.size() - 1, i0 + span);

  if (scratch.tree.size() != span + 1) scratch.tree = WindowTree(span + 1);
  WindowTree& tree = scratch.tree;
  tree.reset();
  auto& events = scratch.events;
  events.clear();

  auto window_range = [&](std::size_t t) {
    const auto c = static_cast<std::size_t>(static_cast<int64_t>(t) - base);
    return std::pair<std::size_t, std::size_t>{c > span ? c - span : 0, std::min(span, c)};
  };

  for (std::size_t t = first; t <= last; ++t) {
    const Trapezoid& trap = chain[t];
    const auto [wlo, whi] = window_range(t);
    if (contains(trap, p)) {
      tree.add(wlo, whi, 1);
      continue;
    }
    std::array<PlanePoint, 4> d;
    for (int k = 0; k < 4; ++k) d[k] = trap.v[k] - p;
    // The trapezoid is seen from p within an angle below pi.
    PlanePoint lo = d[0], hi = d[0];
    for (int k = 1; k < 4; ++k) {
      if (plane_cross(d[k], lo) > 0) lo = d[k];
      if (plane_cross(hi, d[k]) > 0) hi = d[k];
    }
    const PlanePoint enter = sweep_key(lo, mode);
    const PlanePoint exit = sweep_key(hi, mode);
    const auto local = static_cast<uint32_t>(t - first);
    if (angle_less(exit, enter)) tree.add(wlo, whi, 1);  // straddles the initial direction
    events.push_back({enter, 0, local});
    events.push_back({exit, 1, local});
  }

  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (!same_angle(a.key, b.key)) return angle_less(a.key, b.key);
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.local < b.local;
  });

  SweepHit best;
  best.count = tree.max();
  best.pivot_trapezoid = i0;
  best.pivot_vertex = vertex;
  best.pivot = p;
  best.direction = {1, 0};
  best.window_start = static_cast<std::size_t>(std::max<int64_t>(0, base + static_cast<int64_t>(tree.argmax())));
  for (const Event& e : events) {
    const auto [wlo, whi] = window_range(first + e.local);
    if (e.kind == 0) {
      tree.add(wlo, whi, 1);
      if (tree.max() > best.count) {
        best.count = tree.max();
        best.direction = e.key;
        best.window_start =
            static_cast<std::size_t>(std::max<int64_t>(0, base + static_cast<int64_t>(tree.argmax())));
      }
    } else {
      tree.add(wlo, whi, -1);
    }
  }
  return best;
}

bool better(const SweepHit& a, const SweepHit& b) { return a.count > b.count; }

// ---- normalization ----

constexpr std::array<std::array<Orientation, 6>, 6> kTabulated = [] {
  using O = Orientation;
  return std::array<std::array<O, 6>, 6>{{
      {O::a, O::b, O::c, O::d, O::e, O::f},
      {O::b, O::a, O::d, O::c, O::f, O::e},
      {O::c, O::d, O::f, O::e, O::b, O::a},
      {O::d, O::c, O::e, O::f, O::a, O::b},
      {O::e, O::f, O::b, O::a, O::c, O::d},
      {O::f, O::e, O::a, O::b, O::d, O::c},
  }};
}();

Orientation tabulated_left_inverse(Orientation x) {
  for (Orientation g : kAllOrientations) {
    if (tabulated_product(g, x) == Orientation::a) return g;
  }
  throw DomainError("composition table has no inverse");
}

// The relabeling applied to a window whose first orientation is `first`.
std::array<uint8_t, 6> relabeling(NormalizationRule rule, Orientation first) {
  std::array<uint8_t, 6> map{};
  for (Orientation x : kAllOrientations) {
    Orientation y = x;
    if (rule == NormalizationRule::isometry) y = compose(inverse(first), x);
    if (rule == NormalizationRule::tabulated) y = tabulated_product(tabulated_left_inverse(first), x);
    map[static_cast<int>(x)] = static_cast<uint8_t>(y);
  }
  return map;
}

constexpr uint64_t kMod = (uint64_t{1} << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  uint64_t r = static_cast<uint64_t>(p & kMod) + static_cast<uint64_t>(p >> 61);
  return r >= kMod ? r - kMod : r;
}

uint64_t polyhash(const uint8_t* s, std::size_t n) {
  uint64_t h = 0;
  for (std::size_t t = 0; t < n; ++t) {
    h = mulmod(h, 1'000'003) + s[t] + 1;
    if (h >= kMod) h -= kMod;
  }
  return h;
}

template <class Task>
void run_parallel(std::size_t count, unsigned workers, Task task) {
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t n; (n = next.fetch_add(1)) < count;) task(n);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Orientation tabulated_product(Orientation g, Orientation x) {
  return kTabulated[static_cast<int>(g)][static_cast<int>(x)];
}

std::vector<Orientation> normalize_with(NormalizationRule rule, const std::vector<Orientation>& seq) {
  if (seq.empty()) throw DomainError("cannot normalize an empty sequence");
  const auto map = relabeling(rule, seq.front());
  std::vector<Orientation> out;
  out.reserve(seq.size());
  for (Orientation x : seq) out.push_back(static_cast<Orientation>(map[static_cast<int>(x)]));
  return out;
}

bool line_meets(const Trapezoid& t, const PlanePoint& p, const PlanePoint& d) {
  bool pos = false, neg = false;
  for (const auto& v : t.v) {
    const wide c = plane_cross(d, v - p);
    if (c >= 0) pos = true;
    if (c <= 0) neg = true;
  }
  return pos && neg;
}

SweepHit sweep_pivot_trapezoid(const std::vector<Trapezoid>& chain, std::size_t center, std::size_t span,
                               SweepLine mode) {
  if (center >= chain.size()) throw DomainError("pivot trapezoid outside the chain");
  PivotScratch scratch{WindowTree(span + 1), {}};
  SweepHit best;
  for (int v = 0; v < 4; ++v) {
    SweepHit h = sweep_one(chain, center, v, span, mode, scratch);
    if (v == 0 || better(h, best)) best = h;
  }
  return best;
}

SweepHit sweep_chain(const std::vector<Trapezoid>& chain, std::size_t span, SweepLine mode) {
  if (chain.empty()) throw DomainError("empty chain");
  SweepHit best;
  for (std::size_t t = 0; t < chain.size(); ++t) {
    SweepHit h = sweep_pivot_trapezoid(chain, t, span, mode);
    if (t == 0 || better(h, best)) best = h;
  }
  return best;
}

int brute_force_chain(const std::vector<Trapezoid>& chain, std::size_t span) {
  if (chain.empty()) throw DomainError("empty chain");
  const std::size_t n = chain.size();
  int best = 0;
  std::vector<int> hit(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n && b - a <= span; ++b) {
      const std::size_t lo = b > span ? b - span : 0;
      const std::size_t hi = std::min(n - 1, a + span);
      for (const auto& va : chain[a].v) {
        for (const auto& vb : chain[b].v) {
          if (va == vb) continue;
          const PlanePoint d = vb - va;
          for (std::size_t t = lo; t <= hi; ++t) hit[t] = line_meets(chain[t], va, d) ? 1 : 0;
          // windows [s, s + span] holding both a and b
          for (std::size_t s = lo; s <= a; ++s) {
            int count = 0;
            for (std::size_t t = s; t <= std::min(hi, s + span); ++t) count += hit[t];
            best = std::max(best, count);
          }
        }
      }
    }
  }
  return best;
}

std::vector<DistinctContext> distinct_normalized_windows(std::size_t length, NormalizationRule rule) {
  if (length == 0) throw DomainError("window length must be positive");
  const std::vector<std::size_t> starts = distinct_subword_starts(length);
  const Word word = lambda_prefix(starts.back() + length - 1);
  const std::vector<Orientation> orient = psi(word);

  // One relabeled copy of the orientation text per possible first element.
  std::array<std::vector<uint8_t>, 6> texts;
  for (Orientation g : kAllOrientations) {
    const auto map = relabeling(rule, g);
    auto& text = texts[static_cast<int>(g)];
    require_budget(orient.size(), "relabeled orientation text");
    text.resize(orient.size());
    for (std::size_t n = 0; n < orient.size(); ++n) text[n] = map[static_cast<int>(orient[n])];
  }

  struct Slot {
    uint64_t hash;
    const uint8_t* data;
  };
  std::size_t cap = 64;
  while (cap < starts.size() * 2) cap <<= 1;
  std::vector<Slot> slots(cap, Slot{0, nullptr});

  std::vector<DistinctContext> out;
  for (std::size_t s : starts) {
    const uint8_t* data = texts[static_cast<int>(orient[s - 1])].data() + (s - 1);
    const uint64_t h = polyhash(data, length);
    std::size_t slot = h & (cap - 1);
    bool seen = false;
    while (slots[slot].data) {
      if (slots[slot].hash == h && std::memcmp(slots[slot].data, data, length) == 0) {
        seen = true;
        break;
      }
      slot = (slot + 1) & (cap - 1);
    }
    if (seen) continue;
    slots[slot] = {h, data};
    DistinctContext ctx;
    ctx.start = s;
    ctx.normalized.resize(length);
    for (std::size_t t = 0; t < length; ++t) ctx.normalized[t] = static_cast<Orientation>(data[t]);
    out.push_back(std::move(ctx));
  }
  return out;
}

StabbingReport max_intersected_span(std::size_t span, const StabbingOptions& opt) {
  const std::size_t length = 2 * span + 1;
  const std::vector<DistinctContext> contexts = distinct_normalized_windows(length, opt.rule);

  std::vector<SweepHit> hits(contexts.size());
  run_parallel(contexts.size(), opt.workers, [&](std::size_t n) {
    const auto chain = trapezoid_chain(contexts[n].normalized);
    hits[n] = sweep_pivot_trapezoid(chain, span, span, opt.mode);
  });

  StabbingReport rep;
  rep.window = span;
  rep.span = span;
  rep.contexts = contexts.size();
  std::size_t arg = 0;
  for (std::size_t n = 0; n < hits.size(); ++n) {
    if (hits[n].count > hits[arg].count) arg = n;
  }
  rep.max = hits[arg].count;
  rep.context_start = contexts[arg].start;
  rep.context = contexts[arg].normalized;
  rep.hit = hits[arg];
  return rep;
}

StabbingReport max_intersected(std::size_t window, const StabbingOptions& opt) {
  StabbingReport rep = max_intersected_span(window, opt);
  rep.window = window;
  return rep;
}

int brute_force_max_intersected(std::size_t window, std::size_t prefix) {
  if (prefix < 1) throw DomainError("prefix must be positive");
  return brute_force_chain(trapezoid_chain(lambda_prefix(prefix)), window);
}

int sweep_max_intersected(std::size_t window, std::size_t prefix) {
  if (prefix < 1) throw DomainError("prefix must be positive");
  return sweep_chain(trapezoid_chain(lambda_prefix(prefix)), window).count;
}

}  // namespace swalk
