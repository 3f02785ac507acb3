#include <doctest.h>

#include <chrono>
#include <set>

#include "swalk/errors.hpp"
#include "swalk/symbols.hpp"

using namespace swalk;

namespace {

Word W(std::string_view text) { return parse_word(text); }

std::string steps(const Word& w) {
  std::string out;
  for (Step s : phi(w)) out.push_back(step_char(s));
  return out;
}

std::string steps(const std::vector<Step>& v) {
  std::string out;
  for (Step s : v) out.push_back(step_char(s));
  return out;
}

// Independent expansion: apply the substitution n times to the one-letter word.
Word expand(Symbol s, int n) {
  Word w{s};
  for (int t = 0; t < n; ++t) {
    Word next;
    for (Symbol x : w) next.insert(next.end(), mu(x).begin(), mu(x).end());
    w = std::move(next);
  }
  return w;
}

}  // namespace

TEST_CASE("substitution table") {
  CHECK(format_word(Word(mu(Symbol::i).begin(), mu(Symbol::i).end())) == "i jp ibp i kb ibp i");
  CHECK(format_word(Word(mu(Symbol::kbp).begin(), mu(Symbol::kbp).end())) == "kbp k ip kbp k jb kbp");
  CHECK(format_word(Word(mu(Symbol::jb).begin(), mu(Symbol::jb).end())) == "jb jp i jb jp kbp jb");
  for (Symbol s : kAllSymbols) {
    CHECK(mu(s).front() == s);
    CHECK(mu(s).back() == s);
  }
}

TEST_CASE("lambda prefixes") {
  CHECK(lambda_prefix(0).empty());
  CHECK(lambda_prefix(1) == W("i"));
  CHECK(lambda_prefix(7) == W("i jp ibp i kb ibp i"));
  CHECK(lambda_prefix(49) == expand(Symbol::i, 2));
  CHECK(lambda_prefix(16807) == expand(Symbol::i, 5));

  const Word long_prefix = lambda_prefix(5000);
  for (std::size_t m : {0u, 1u, 13u, 100u, 4999u}) {
    const Word shorter = lambda_prefix(m);
    CHECK(std::equal(shorter.begin(), shorter.end(), long_prefix.begin()));
  }
}

TEST_CASE("prolongability") {
  for (Symbol s : kAllSymbols) {
    for (int n = 0; n < 4; ++n) {
      const Word a = mu_power(s, n);
      const Word b = mu_power(s, n + 1);
      REQUIRE(b.size() == 7 * a.size());
      CHECK(std::equal(a.begin(), a.end(), b.begin()));
    }
  }
}

TEST_CASE("streaming cursor matches the materialized prefix") {
  const Word w = lambda_prefix(120000);
  LambdaCursor cur;
  CHECK(cur.current() == w[0]);
  for (std::size_t p = 1; p < w.size(); ++p) {
    REQUIRE(cur.next() == w[p]);
  }
  CHECK(cur.position() == w.size() - 1);
}

TEST_CASE("output map phi") {
  CHECK(steps(lambda_prefix(35)) == "ijiikiijijjkjjiijiikiijiikiikkjkkik");
  CHECK(phi(Symbol::ibp) == Step::i);
  CHECK(phi(Word{}).empty());
  for (Symbol s : kAllSymbols) {
    const auto name = token(s);
    CHECK(step_char(phi(s)) == name[0]);
  }
}

TEST_CASE("orientation map psi") {
  CHECK(format_orientations(psi(W("jp ibp i kb ibp i"))) == "daafaa");
  CHECK(psi(Symbol::k) == Orientation::e);
  CHECK(format_orientations(psi(lambda_prefix(7))) == "adaafaa");
  CHECK(psi(Symbol::i) == Orientation::a);
  CHECK(psi(Symbol::ibp) == Orientation::a);
  CHECK(psi(Symbol::ip) == Orientation::b);
  CHECK(psi(Symbol::ib) == Orientation::b);
}

TEST_CASE("psi of an image keeps the orientation at both ends") {
  for (Symbol s : kAllSymbols) {
    const auto o = psi(Word(mu(s).begin(), mu(s).end()));
    CHECK(o.front() == psi(s));
    CHECK(o.back() == psi(s));
  }
}

TEST_CASE("symbol operators") {
  CHECK(sym_alpha(Symbol::i) == Symbol::jp);
  CHECK(sym_R(Symbol::kp) == Symbol::kbp);
  CHECK(sym_beta(Symbol::j) == Symbol::kp);
  CHECK(sym_R(Symbol::ib) == Symbol::i);
  using SymOp = Symbol (*)(Symbol);
  for (SymOp op : {SymOp(&sym_alpha), SymOp(&sym_beta), SymOp(&sym_R)}) {
    std::set<Symbol> image;
    for (Symbol x : kAllSymbols) {
      image.insert(op(x));
      CHECK(op(op(x)) == x);
    }
    CHECK(image.size() == 12);
  }
}

TEST_CASE("reversal parity commutes with alpha and beta") {
  for (Symbol x : kAllSymbols) {
    CHECK(sym_R(sym_alpha(x)) == sym_alpha(sym_R(x)));
    CHECK(sym_R(sym_beta(x)) == sym_beta(sym_R(x)));
  }
}

TEST_CASE("image identities for the inner symbols") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const Word base = mu_power(Symbol::i, n);
    CHECK(mu_power(Symbol::jp, n) == sym_alpha(base));
    CHECK(mu_power(Symbol::ibp, n) == sym_R(reversed(sym_beta(base))));
    CHECK(mu_power(Symbol::kb, n) == sym_R(reversed(sym_beta(sym_alpha(base)))));
  }
}

TEST_CASE("vector-operator construction") {
  CHECK(steps(gr_construction(0)) == "i");
  CHECK(steps(gr_construction(1)) == "ijiikii");
  const std::string a2 = steps(gr_construction(2));
  REQUIRE(a2.size() == 49);
  CHECK(a2.substr(0, 35) == "ijiikiijijjkjjiijiikiijiikiikkjkkik");
}

TEST_CASE("substitution and operator constructions agree") {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(phi(mu_power(Symbol::i, n)) == gr_construction(n));
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0);
}

TEST_CASE("word serialization") {
  const Word w = lambda_prefix(200);
  CHECK(parse_word(format_word(w)) == w);
  CHECK(parse_word("  i\tjbp\n k ") == W("i jbp k"));
  CHECK_THROWS_AS(parse_word("i q"), DomainError);
  for (Symbol s : kAllSymbols) CHECK(parse_symbol(token(s)) == s);
}

TEST_CASE("prefix length is checked against the memory budget") {
  const std::size_t saved = memory_budget();
  set_memory_budget(1000);
  CHECK_THROWS_AS(lambda_prefix(5000), ResourceLimitError);
  set_memory_budget(saved);
}
