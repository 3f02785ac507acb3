#pragma once

// Index of the last new subword of lambda, and enumeration of distinct
// subwords by their first occurrence.
//
// Positions here follow the 1-based convention of lambda itself: a start
// position s denotes the window lambda[s : s + n - 1], i.e. the 0-based slice
// beginning at s - 1. Trapezoid index m = s - 1 is the first trapezoid of
// that window.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swalk {

struct NoveltyIndex {
  std::size_t length = 0;
  // Largest start position whose window has no earlier occurrence.
  std::size_t index = 0;
  // Last start position that was scanned. For length >= 3 this is
  // 7 * I(ceil(length / 7) + 1).
  std::size_t bound_used = 0;
};

// Memoized; safe to call from several threads.
NoveltyIndex index_of_last_new_subword(std::size_t n);

// One start per distinct length-n subword (its first occurrence), ascending.
std::vector<std::size_t> distinct_subword_starts(std::size_t n);

// Recursion bound for n >= 3.
std::size_t novelty_scan_bound(std::size_t n);

// Windows of length n over `text`, starting at 0-based offsets 0..starts-1.
// Returns the 0-based offsets of first occurrences, ascending. Hash matches
// are confirmed byte-for-byte, so distinct windows are never merged.
std::vector<std::size_t> first_occurrences(std::span<const uint8_t> text, std::size_t n, std::size_t starts);

}  // namespace swalk
