#pragma once

// The six trapezoid orientations and their symmetry group.
//
// Each orientation is the image of orientation `a` under one of the six
// plane isometries that permute the projected unit steps i, j, k (the
// rotations by 0/120/240 degrees and the three reflections). Identifying
// an orientation with that permutation of {i, j, k} gives a group
// isomorphic to S3 with identity a:
//
//   a = id        c = (i j k)     e = (i k j)      rotations
//   b = (j k)     d = (i j)       f = (i k)        reflections
//
// Applying one isometry to a whole trapezoid chain maps every orientation x
// to compose(g, x), which is what normalization relies on.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swalk {

enum class Orientation : uint8_t { a, b, c, d, e, f };

inline constexpr int kOrientationCount = 6;

inline constexpr std::array<Orientation, kOrientationCount> kAllOrientations = {
    Orientation::a, Orientation::b, Orientation::c, Orientation::d, Orientation::e, Orientation::f};

// g after h: the isometry that applies h first.
Orientation compose(Orientation g, Orientation h);
Orientation inverse(Orientation g);

// Image of unit step index (0 = i, 1 = j, 2 = k) under the orientation's permutation.
int permute_step(Orientation g, int step);

// True for the rotations a, c, e (top side to the left of the walking direction).
bool is_rotation(Orientation g);

char to_char(Orientation o);
Orientation orientation_from_char(char ch);
std::string format_orientations(const std::vector<Orientation>& seq);
std::vector<Orientation> parse_orientations(std::string_view text);

// An orientation sequence whose first element is `a`.
class NormalizedSequence {
 public:
  const std::vector<Orientation>& orientations() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  friend bool operator==(const NormalizedSequence&, const NormalizedSequence&) = default;

 private:
  friend NormalizedSequence normalize(const std::vector<Orientation>& seq);
  std::vector<Orientation> seq_;
};

// Left-composes every element with the inverse of the first one.
NormalizedSequence normalize(const std::vector<Orientation>& seq);

// compose(g, x) for every x.
std::vector<Orientation> act(Orientation g, const std::vector<Orientation>& seq);

}  // namespace swalk
