#include "swalk/orientation.hpp"

#include "swalk/errors.hpp"

namespace swalk {

namespace {

using Perm = std::array<int, 3>;

constexpr std::array<Perm, kOrientationCount> kPerms = {{
    {0, 1, 2},  // a  identity
    {0, 2, 1},  // b  swap j,k
    {1, 2, 0},  // c  i->j->k->i
    {1, 0, 2},  // d  swap i,j
    {2, 0, 1},  // e  i->k->j->i
    {2, 1, 0},  // f  swap i,k
}};

constexpr Orientation from_perm(const Perm& p) {
  for (int n = 0; n < kOrientationCount; ++n) {
    if (kPerms[n] == p) return static_cast<Orientation>(n);
  }
  return Orientation::a;
}

using Table = std::array<std::array<Orientation, kOrientationCount>, kOrientationCount>;

constexpr Table make_products() {
  Table t{};
  for (int g = 0; g < kOrientationCount; ++g) {
    for (int h = 0; h < kOrientationCount; ++h) {
      Perm p{};
      for (int s = 0; s < 3; ++s) p[s] = kPerms[g][kPerms[h][s]];
      t[g][h] = from_perm(p);
    }
  }
  return t;
}

constexpr Table kProducts = make_products();

}  // namespace

Orientation compose(Orientation g, Orientation h) {
  return kProducts[static_cast<int>(g)][static_cast<int>(h)];
}

Orientation inverse(Orientation g) {
  for (Orientation h : kAllOrientations) {
    if (compose(g, h) == Orientation::a) return h;
  }
  return Orientation::a;
}

int permute_step(Orientation g, int step) { return kPerms[static_cast<int>(g)][step]; }

bool is_rotation(Orientation g) { return g == Orientation::a || g == Orientation::c || g == Orientation::e; }

char to_char(Orientation o) { return static_cast<char>('a' + static_cast<int>(o)); }

Orientation orientation_from_char(char ch) {
  if (ch < 'a' || ch > 'f') throw DomainError(std::string("unknown orientation '") + ch + "'");
  return static_cast<Orientation>(ch - 'a');
}

std::string format_orientations(const std::vector<Orientation>& seq) {
  std::string out;
  out.reserve(seq.size());
  for (Orientation o : seq) out.push_back(to_char(o));
  return out;
}

std::vector<Orientation> parse_orientations(std::string_view text) {
  std::vector<Orientation> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(orientation_from_char(ch));
  return out;
}

std::vector<Orientation> act(Orientation g, const std::vector<Orientation>& seq) {
  std::vector<Orientation> out;
  out.reserve(seq.size());
  for (Orientation x : seq) out.push_back(compose(g, x));
  return out;
}

NormalizedSequence normalize(const std::vector<Orientation>& seq) {
  if (seq.empty()) throw DomainError("cannot normalize an empty sequence");
  NormalizedSequence out;
  out.seq_ = act(inverse(seq.front()), seq);
  return out;
}

}  // namespace swalk
