#include "swalk/subwords.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "swalk/errors.hpp"
#include "swalk/symbols.hpp"

namespace swalk {

namespace {

constexpr uint64_t kMod = (uint64_t{1} << 61) - 1;
constexpr uint64_t kBase = 1'000'003;

uint64_t mulmod(uint64_t a, uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  uint64_t lo = static_cast<uint64_t>(p & kMod);
  uint64_t hi = static_cast<uint64_t>(p >> 61);
  uint64_t r = lo + hi;
  return r >= kMod ? r - kMod : r;
}

uint64_t addmod(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r >= kMod ? r - kMod : r;
}

uint64_t submod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kMod - b; }

// Open addressing over (hash, offset) pairs. Equal hashes are compared
// against the text, so true collisions simply occupy separate slots.
class WindowSet {
 public:
  WindowSet(std::span<const uint8_t> text, std::size_t n) : text_(text), n_(n) { rehash(1024); }

  // Inserts the window at `offset` unless an equal one is present.
  bool insert_if_new(uint64_t hash, std::size_t offset) {
    std::size_t slot = hash & mask_;
    while (offsets_[slot] != kEmpty) {
      if (hashes_[slot] == hash && std::memcmp(&text_[offsets_[slot]], &text_[offset], n_) == 0) return false;
      slot = (slot + 1) & mask_;
    }
    hashes_[slot] = hash;
    offsets_[slot] = offset;
    if (++count_ * 2 > offsets_.size()) rehash(offsets_.size() * 2);
    return true;
  }

 private:
  static constexpr std::size_t kEmpty = std::numeric_limits<std::size_t>::max();

  void rehash(std::size_t capacity) {
    std::vector<uint64_t> old_hashes = std::move(hashes_);
    std::vector<std::size_t> old_offsets = std::move(offsets_);
    hashes_.assign(capacity, 0);
    offsets_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    for (std::size_t n = 0; n < old_offsets.size(); ++n) {
      if (old_offsets[n] == kEmpty) continue;
      std::size_t slot = old_hashes[n] & mask_;
      while (offsets_[slot] != kEmpty) slot = (slot + 1) & mask_;
      hashes_[slot] = old_hashes[n];
      offsets_[slot] = old_offsets[n];
    }
  }

  std::span<const uint8_t> text_;
  std::size_t n_;
  std::vector<uint64_t> hashes_;
  std::vector<std::size_t> offsets_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

std::span<const uint8_t> bytes_of(const Word& w) {
  return {reinterpret_cast<const uint8_t*>(w.data()), w.size()};
}

// Scans lambda from the start until every element of `expected` has been
// seen as a window of length n; returns the 1-based start of the last one.
template <std::size_t N>
std::size_t scan_until_complete(const std::set<std::array<Symbol, N>>& expected) {
  std::set<std::array<Symbol, N>> seen;
  LambdaCursor cursor;
  std::array<Symbol, N> window{};
  window[N - 1] = cursor.current();
  for (std::size_t t = 1; t < N; ++t) {
    std::rotate(window.begin(), window.begin() + 1, window.end());
    window[N - 1] = cursor.next();
  }
  std::size_t last = 0;
  for (std::size_t start = 1;; ++start) {
    if (seen.insert(window).second) {
      if (!expected.contains(window)) throw DomainError("window outside the predicted set");
      last = start;
      if (seen.size() == expected.size()) return last;
    }
    std::rotate(window.begin(), window.begin() + 1, window.end());
    window[N - 1] = cursor.next();
  }
}

NoveltyIndex base_case(std::size_t n) {
  NoveltyIndex out{n, 0, 0};
  if (n == 1) {
    std::set<std::array<Symbol, 1>> expected;
    for (Symbol s : kAllSymbols) expected.insert({s});
    out.index = scan_until_complete(expected);
  } else {
    // mu(b) starts and ends with b, so every length-2 window of lambda lies
    // inside a single image mu(b).
    std::set<std::array<Symbol, 2>> expected;
    for (Symbol b : kAllSymbols) {
      const auto& img = mu(b);
      for (std::size_t t = 0; t + 1 < img.size(); ++t) expected.insert({img[t], img[t + 1]});
    }
    out.index = scan_until_complete(expected);
  }
  out.bound_used = out.index;
  return out;
}

std::mutex g_memo_mutex;
std::map<std::size_t, NoveltyIndex> g_memo;

std::size_t checked_times7(std::size_t v) {
  if (v > std::numeric_limits<std::size_t>::max() / 7) throw ResourceLimitError("scan bound overflows");
  return v * 7;
}

}  // namespace

std::vector<std::size_t> first_occurrences(std::span<const uint8_t> text, std::size_t n, std::size_t starts) {
  if (n == 0) throw DomainError("window length must be positive");
  if (starts == 0) return {};
  if (starts + n - 1 > text.size()) throw DomainError("text too short for the requested windows");

  uint64_t top = 1;  // kBase^(n-1)
  for (std::size_t t = 1; t < n; ++t) top = mulmod(top, kBase);

  uint64_t h = 0;
  for (std::size_t t = 0; t < n; ++t) h = addmod(mulmod(h, kBase), text[t] + 1u);

  WindowSet set(text, n);
  std::vector<std::size_t> firsts;
  for (std::size_t s = 0;; ++s) {
    if (set.insert_if_new(h, s)) firsts.push_back(s);
    if (s + 1 == starts) break;
    h = submod(h, mulmod(text[s] + 1u, top));
    h = addmod(mulmod(h, kBase), text[s + n] + 1u);
  }
  return firsts;
}

std::size_t novelty_scan_bound(std::size_t n) {
  if (n < 3) throw DomainError("recursion bound applies to lengths >= 3");
  return checked_times7(index_of_last_new_subword((n + 6) / 7 + 1).index);
}

NoveltyIndex index_of_last_new_subword(std::size_t n) {
  if (n == 0) throw DomainError("subword length must be positive");
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find(n); it != g_memo.end()) return it->second;
  }

  NoveltyIndex out;
  if (n <= 2) {
    out = base_case(n);
  } else {
    const std::size_t bound = novelty_scan_bound(n);
    Word prefix = lambda_prefix(bound + n - 1);
    auto firsts = first_occurrences(bytes_of(prefix), n, bound);
    out = {n, firsts.back() + 1, bound};
  }

  std::lock_guard lock(g_memo_mutex);
  g_memo.emplace(n, out);
  return out;
}

std::vector<std::size_t> distinct_subword_starts(std::size_t n) {
  const NoveltyIndex last = index_of_last_new_subword(n);
  Word prefix = lambda_prefix(last.index + n - 1);
  auto firsts = first_occurrences(bytes_of(prefix), n, last.index);
  for (auto& f : firsts) ++f;
  return firsts;
}

}  // namespace swalk
