#pragma once

// The 12-letter alphabet, the substitution mu, its fixed point lambda and the
// output maps to unit steps (phi) and trapezoid orientations (psi).
//
// Indexing: lambda is 1-based in the mathematical notation (lambda[1] = i).
// Everything in this API is 0-based: lambda_prefix(n)[p] is lambda[p + 1],
// and walk point / trapezoid m pairs with lambda_prefix(...)[m].

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swalk/orientation.hpp"

namespace swalk {

// Primes are spelled "p" and the b subscript "b": i' -> ip, i_b' -> ibp.
enum class Symbol : uint8_t { i, j, k, ip, jp, kp, ib, jb, kb, ibp, jbp, kbp };

inline constexpr int kAlphabetSize = 12;
inline constexpr int kImageLength = 7;

using Word = std::vector<Symbol>;

enum class Step : uint8_t { i, j, k };

inline constexpr std::array<Symbol, kAlphabetSize> kAllSymbols = {
    Symbol::i,  Symbol::j,  Symbol::k,  Symbol::ip,  Symbol::jp,  Symbol::kp,
    Symbol::ib, Symbol::jb, Symbol::kb, Symbol::ibp, Symbol::jbp, Symbol::kbp};

constexpr int index_of(Symbol s) { return static_cast<int>(s); }

const std::array<Symbol, kImageLength>& mu(Symbol s);
Word mu(const Word& w);
Word mu_power(Symbol s, int n);

Symbol sym_alpha(Symbol s);
Symbol sym_beta(Symbol s);
Symbol sym_R(Symbol s);
Word sym_alpha(const Word& w);
Word sym_beta(const Word& w);
Word sym_R(const Word& w);
Word reversed(Word w);

Step phi(Symbol s);
std::vector<Step> phi(const Word& w);

Orientation psi(Symbol s);
std::vector<Orientation> psi(const Word& w);

// First n symbols of lambda, computed in one pass from lambda = mu(lambda):
// the symbol at 0-based position p is mu(lambda[p / 7])[p % 7].
Word lambda_prefix(std::size_t n);

// Streams lambda without storing it. Keeps the base-7 digits of the current
// position and the chain of ancestor symbols, so memory is O(log n).
class LambdaCursor {
 public:
  LambdaCursor();

  Symbol current() const { return path_.front(); }
  std::size_t position() const { return position_; }
  // Advances to the next symbol and returns it.
  Symbol next();

 private:
  std::vector<uint8_t> digits_;  // least significant first
  std::vector<Symbol> path_;     // path_[l] = ancestor at level l, path_[0] = leaf
  std::size_t position_ = 0;
};

// The vector-operator recursion A_{n+1} = (A, aA, R bA, A, R b aA, R bA, A)
// starting from A_0 = (i). Independent of mu; used as an equivalence oracle.
std::vector<Step> gr_construction(int order);

// Vector operators on unit steps.
Step step_alpha(Step s);
Step step_beta(Step s);

std::string_view token(Symbol s);
Symbol parse_symbol(std::string_view token);
std::string format_word(const Word& w);
Word parse_word(std::string_view text);

char step_char(Step s);

}  // namespace swalk
