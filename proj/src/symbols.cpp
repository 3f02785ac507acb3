#include "swalk/symbols.hpp"

#include <algorithm>
#include <sstream>

#include "swalk/errors.hpp"

namespace swalk {

namespace {

using S = Symbol;

constexpr std::array<std::array<Symbol, kImageLength>, kAlphabetSize> kMu = {{
    {S::i, S::jp, S::ibp, S::i, S::kb, S::ibp, S::i},
    {S::j, S::kp, S::jbp, S::j, S::ib, S::jbp, S::j},
    {S::k, S::ip, S::kbp, S::k, S::jb, S::kbp, S::k},
    {S::ip, S::k, S::ib, S::ip, S::jbp, S::ib, S::ip},
    {S::jp, S::i, S::jb, S::jp, S::kbp, S::jb, S::jp},
    {S::kp, S::j, S::kb, S::kp, S::ibp, S::kb, S::kp},
    {S::ib, S::ip, S::k, S::ib, S::ip, S::jbp, S::ib},
    {S::jb, S::jp, S::i, S::jb, S::jp, S::kbp, S::jb},
    {S::kb, S::kp, S::j, S::kb, S::kp, S::ibp, S::kb},
    {S::ibp, S::i, S::jp, S::ibp, S::i, S::kb, S::ibp},
    {S::jbp, S::j, S::kp, S::jbp, S::j, S::ib, S::jbp},
    {S::kbp, S::k, S::ip, S::kbp, S::k, S::jb, S::kbp},
}};

constexpr std::array<Symbol, kAlphabetSize> kAlpha = {S::jp, S::ip, S::kp, S::j,   S::i,   S::k,
                                                      S::jbp, S::ibp, S::kbp, S::jb, S::ib, S::kb};
constexpr std::array<Symbol, kAlphabetSize> kBeta = {S::ip, S::kp, S::jp, S::i,   S::k,   S::j,
                                                     S::ibp, S::kbp, S::jbp, S::ib, S::kb, S::jb};
constexpr std::array<Symbol, kAlphabetSize> kReversal = {S::ib, S::jb, S::kb, S::ibp, S::jbp, S::kbp,
                                                         S::i,  S::j,  S::k,  S::ip,  S::jp,  S::kp};

constexpr std::array<Step, kAlphabetSize> kPhi = {Step::i, Step::j, Step::k, Step::i, Step::j, Step::k,
                                                  Step::i, Step::j, Step::k, Step::i, Step::j, Step::k};

using O = Orientation;
constexpr std::array<Orientation, kAlphabetSize> kPsi = {O::a, O::c, O::e, O::b, O::d, O::f,
                                                         O::b, O::d, O::f, O::a, O::c, O::e};

constexpr std::array<std::string_view, kAlphabetSize> kTokens = {"i",  "j",  "k",  "ip",  "jp",  "kp",
                                                                 "ib", "jb", "kb", "ibp", "jbp", "kbp"};

template <class F>
Word map_word(const Word& w, F f) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(f(s));
  return out;
}

}  // namespace

const std::array<Symbol, kImageLength>& mu(Symbol s) { return kMu[index_of(s)]; }

Word mu(const Word& w) {
  Word out;
  out.reserve(w.size() * kImageLength);
  for (Symbol s : w) {
    const auto& img = kMu[index_of(s)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word mu_power(Symbol s, int n) {
  Word w{s};
  for (int r = 0; r < n; ++r) w = mu(w);
  return w;
}

Symbol sym_alpha(Symbol s) { return kAlpha[index_of(s)]; }
Symbol sym_beta(Symbol s) { return kBeta[index_of(s)]; }
Symbol sym_R(Symbol s) { return kReversal[index_of(s)]; }
Word sym_alpha(const Word& w) { return map_word(w, [](Symbol s) { return sym_alpha(s); }); }
Word sym_beta(const Word& w) { return map_word(w, [](Symbol s) { return sym_beta(s); }); }
Word sym_R(const Word& w) { return map_word(w, [](Symbol s) { return sym_R(s); }); }

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Step phi(Symbol s) { return kPhi[index_of(s)]; }

std::vector<Step> phi(const Word& w) {
  std::vector<Step> out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(phi(s));
  return out;
}

Orientation psi(Symbol s) { return kPsi[index_of(s)]; }

std::vector<Orientation> psi(const Word& w) {
  std::vector<Orientation> out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(psi(s));
  return out;
}

Word lambda_prefix(std::size_t n) {
  require_budget(n, "lambda prefix");
  Word w(n);
  if (n == 0) return w;
  w[0] = Symbol::i;
  for (std::size_t p = 1; p < n; ++p) w[p] = kMu[index_of(w[p / kImageLength])][p % kImageLength];
  return w;
}

LambdaCursor::LambdaCursor() : digits_{0}, path_{Symbol::i, Symbol::i} {}

Symbol LambdaCursor::next() {
  ++position_;
  std::size_t level = 0;
  while (level < digits_.size() && digits_[level] == kImageLength - 1) {
    digits_[level] = 0;
    ++level;
  }
  if (level == digits_.size()) {
    // New top level; mu(i) starts with i, so lower ancestors stay valid.
    digits_.push_back(0);
    path_.push_back(Symbol::i);
  }
  ++digits_[level];
  for (std::size_t l = level + 1; l-- > 0;) path_[l] = kMu[index_of(path_[l + 1])][digits_[l]];
  return path_.front();
}

Step step_alpha(Step s) {
  switch (s) {
    case Step::i: return Step::j;
    case Step::j: return Step::i;
    case Step::k: return Step::k;
  }
  return s;
}

Step step_beta(Step s) {
  switch (s) {
    case Step::i: return Step::i;
    case Step::j: return Step::k;
    case Step::k: return Step::j;
  }
  return s;
}

std::vector<Step> gr_construction(int order) {
  if (order < 0) throw DomainError("order must be non-negative");
  std::size_t len = 1;
  for (int r = 0; r < order; ++r) len *= kImageLength;
  require_budget(len, "vector-operator construction");

  std::vector<Step> a{Step::i};
  for (int r = 0; r < order; ++r) {
    std::vector<Step> alpha_a, beta_a, beta_alpha_a;
    alpha_a.reserve(a.size());
    beta_a.reserve(a.size());
    beta_alpha_a.reserve(a.size());
    for (Step s : a) {
      alpha_a.push_back(step_alpha(s));
      beta_a.push_back(step_beta(s));
      beta_alpha_a.push_back(step_beta(step_alpha(s)));
    }
    std::reverse(beta_a.begin(), beta_a.end());
    std::reverse(beta_alpha_a.begin(), beta_alpha_a.end());

    std::vector<Step> next;
    next.reserve(a.size() * kImageLength);
    for (const auto* part : {&a, &alpha_a, &beta_a, &a, &beta_alpha_a, &beta_a, &a}) {
      next.insert(next.end(), part->begin(), part->end());
    }
    a = std::move(next);
  }
  return a;
}

std::string_view token(Symbol s) { return kTokens[index_of(s)]; }

Symbol parse_symbol(std::string_view tok) {
  for (int n = 0; n < kAlphabetSize; ++n) {
    if (kTokens[n] == tok) return static_cast<Symbol>(n);
  }
  throw DomainError("unknown symbol token '" + std::string(tok) + "'");
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (n) out.push_back(' ');
    out += token(w[n]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok) w.push_back(parse_symbol(tok));
  return w;
}

char step_char(Step s) { return "ijk"[static_cast<int>(s)]; }

}  // namespace swalk
