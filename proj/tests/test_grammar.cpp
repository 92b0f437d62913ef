// Licensed under the Apache License 2.0 (see LICENSE file).

#include <functional>
#include <set>

#include "cflab/error.hpp"
#include "cflab/grammar.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

// All words of length <= n over the alphabet accepted by `pred`.
std::set<Word> brute(const oracle::Letters& alphabet, std::size_t n,
                     const std::function<bool(const oracle::Letters&)>& pred) {
  std::set<Word> out;
  for (const auto& w : oracle::words_upto(alphabet, n))
    if (pred(w)) out.insert(Word(w));
  return out;
}

bool dyck(const oracle::Letters& w) {
  long depth = 0;
  for (auto l : w) {
    depth += l == 0 ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

struct Case {
  const char* name;
  const char* text;
  oracle::Letters alphabet;
  std::function<bool(const oracle::Letters&)> pred;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c{
      {"even palindromes", "S -> '0' S '0' | '1' S '1' | '0' '0' | '1' '1'", {0, 1},
       [](const auto& w) { return !w.empty() && w.size() % 2 == 0 && oracle::palindrome(w); }},
      {"all palindromes with lambda", "S -> '0' S '0' | '1' S '1' | '0' | '1' | ()", {0, 1},
       [](const auto& w) { return oracle::palindrome(w); }},
      {"dyck with lambda", "S -> '0' S '1' S | ()", {0, 1}, dyck},
      {"dyck via units", "S -> A\nA -> B | ()\nB -> '0' A '1' A", {0, 1}, dyck},
      {"a+", "S -> S S | 'a'", {97},
       [](const auto& w) { return !w.empty(); }},
      {"a^n b^n", "S -> 'a' S 'b' | 'a' 'b'", {97, 98},
       [](const auto& w) {
         const std::size_t n = w.size();
         if (n == 0 || n % 2) return false;
         for (std::size_t p = 0; p < n; ++p)
           if (w[p] != (p < n / 2 ? 97u : 98u)) return false;
         return true;
       }},
      {"useless and nullable start in body",
       "S -> S 'a' | () | U\nU -> U 'b'\nD -> 'c'", {97, 98, 99},
       [](const auto& w) { return std::all_of(w.begin(), w.end(), [](auto l) { return l == 97; }); }},
      {"long bodies", "S -> '0' '1' '0' S | '1' '1' '1' '1'", {0, 1},
       [](const auto& w) {
         // (010)^k 1111
         if (w.size() < 4 || (w.size() - 4) % 3) return false;
         const std::size_t k = (w.size() - 4) / 3;
         for (std::size_t p = 0; p < 3 * k; ++p)
           if (w[p] != (p % 3 == 1 ? 1u : 0u)) return false;
         for (std::size_t p = 3 * k; p < w.size(); ++p)
           if (w[p] != 1) return false;
         return true;
       }},
  };
  return c;
}

}  // namespace

TEST_CASE("grammar text round trip") {
  const Cfg g = Cfg::parse("S -> A 'b' | ()\nA -> 'a' A | 'a'  # trailing comment\n");
  CHECK(g.nonterminal_count() == 2);
  CHECK(g.productions().size() == 4);
  CHECK(g.start() == 0);
  const Cfg h = Cfg::parse(g.to_text());
  CHECK(h.productions() == g.productions());
  CHECK(g.terminals() == std::vector<Letter>{97, 98});
}

TEST_CASE("grammar parse errors") {
  CHECK_THROWS_AS(Cfg::parse(""), ParseError);
  CHECK_THROWS_AS(Cfg::parse("S -> X"), ParseError);
  CHECK_THROWS_AS(Cfg::parse("S 'a'"), ParseError);
  CHECK_THROWS_AS(Cfg::parse("S -> 'a"), ParseError);
}

TEST_CASE("cnf of a single terminal rule") {
  const CnfGrammar c = to_cnf(Cfg::parse("S -> 'a'"));
  CHECK(c.nonterminal_count() == 1);
  CHECK(c.binaries().empty());
  REQUIRE(c.lexicals().size() == 1);
  CHECK(c.lexicals()[0].terminal == 97);
  CHECK_FALSE(c.accepts_empty());
  CHECK(c.pumping_constant() == 2);
}

TEST_CASE("S -> S S | a enumerates a..aaaa before and after conversion") {
  const Cfg g = Cfg::parse("S -> S S | 'a'");
  const std::vector<Word> want{{97}, {97, 97}, {97, 97, 97}, {97, 97, 97, 97}};
  CHECK(enumerate_language(g, 4) == want);
  CHECK(enumerate_language(to_cnf(g), 4) == want);
  CHECK(enumerate_language(to_cnf(g).to_cfg(), 4) == want);
}

TEST_CASE("enumeration examples") {
  const Cfg pal = Cfg::parse("S -> '0' S '0' | '1' S '1' | '0' '0' | '1' '1'");
  const std::vector<Word> want{{0, 0}, {1, 1}, {0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}};
  CHECK(enumerate_language(pal, 4) == want);
  CHECK(enumerate_language(Cfg::parse("S -> S 'a'"), 6).empty());
  CHECK(enumerate_language(Cfg::parse("S -> 'a'"), 3) == std::vector<Word>{{97}});
  CHECK(enumerate_language(Cfg::parse("S -> ()"), 3) == std::vector<Word>{{}});
}

TEST_CASE("cyk examples") {
  const CnfGrammar pal = to_cnf(Cfg::parse("S -> '0' S '0' | '1' S '1' | '0' '0' | '1' '1'"));
  CHECK(cyk_member(pal, Word{0, 1, 1, 0}));
  CHECK_FALSE(cyk_member(pal, Word{0, 1, 1, 1}));
  CHECK_FALSE(cyk_member(pal, Word{}));
  CHECK_FALSE(cyk_member(pal, Word{0, 7, 7, 0}));
  CHECK(cyk_member(to_cnf(Cfg::parse("S -> 'a' S | ()")), Word{}));
}

TEST_CASE("grammars agree with brute-force predicates up to length 8") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    const Cfg g = Cfg::parse(c.text);
    const CnfGrammar cnf = to_cnf(g);
    const std::set<Word> want = brute(c.alphabet, 8, c.pred);
    CHECK(as_set(enumerate_language(g, 8)) == want);
    std::set<Word> by_cyk;
    for (const auto& w : oracle::words_upto(c.alphabet, 8))
      if (cyk_member(cnf, Word(w))) by_cyk.insert(Word(w));
    CHECK(by_cyk == want);
    // With S -> λ the start symbol must not occur in a body.
    for (const auto& b : cnf.binaries()) {
      if (!cnf.accepts_empty()) break;
      CHECK(b.left != cnf.start());
      CHECK(b.right != cnf.start());
    }
    CHECK(as_set(enumerate_language(cnf.to_cfg(), 8)) == want);
  }
}

TEST_CASE("enumeration is ordered and respects the work limit") {
  const Cfg g = Cfg::parse("S -> '0' S | '1' S | '0' | '1'");
  const auto words = enumerate_language(g, 6);
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(words.size() == 126);
  CHECK_THROWS_AS(enumerate_language(g, 20, {.work_limit = 1000}), CostGuardError);
}

TEST_CASE("cyk table exposes sub-derivations") {
  const CnfGrammar g = to_cnf(Cfg::parse("S -> 'a' S 'b' | 'a' 'b'"));
  const CykTable t(g, Word{97, 97, 98, 98});
  CHECK(t.accepted());
  CHECK(t.derives(1, 2, g.start()));
  CHECK_FALSE(t.derives(0, 2, g.start()));
}
