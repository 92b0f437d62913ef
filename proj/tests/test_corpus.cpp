// Licensed under the Apache License 2.0 (see LICENSE file).

#include <set>

#include "cflab/corpus.hpp"
#include "cflab/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

using oracle::Letters;

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

// Independent membership rules, written from the language definitions.
bool ref_l3eq(const Letters& w) {
  const std::size_t n = w.size();
  if (n == 0 || n % 3) return false;
  for (std::size_t p = 0; p < n; ++p)
    if (w[p] != p / (n / 3)) return false;
  return true;
}

bool ref_pal_sharp(const Letters& w) {
  if (w.size() % 2 == 0) return false;
  const std::size_t mid = w.size() / 2;
  for (std::size_t p = 0; p < w.size(); ++p)
    if ((w[p] == 35) != (p == mid)) return false;
  return oracle::palindrome(w);
}

bool ref_even_pal(const Letters& w) { return !w.empty() && w.size() % 2 == 0 && oracle::palindrome(w); }

// w (3 w^R) x with w over {1,2}, x over {5,10,15,30}, both nonempty.
std::set<Word> ref_l2_1(std::size_t n) {
  std::set<Word> out;
  for (std::size_t a = 1; 2 * a < n; ++a)
    for (const auto& w : oracle::words_of_length({1, 2}, a))
      for (const auto& x : oracle::words_of_length({5, 10, 15, 30}, n - 2 * a)) {
        Letters v = w;
        for (std::size_t p = a; p-- > 0;) v.push_back(3 * w[p]);
        v.insert(v.end(), x.begin(), x.end());
        out.insert(Word(v));
      }
  return out;
}

// y (5 y^R) with y over {1,2,3,6}.
std::set<Word> ref_l2_2(std::size_t n) {
  std::set<Word> out;
  if (n == 0 || n % 2) return out;
  for (const auto& y : oracle::words_of_length({1, 2, 3, 6}, n / 2)) {
    Letters v = y;
    for (std::size_t p = y.size(); p-- > 0;) v.push_back(5 * y[p]);
    out.insert(Word(v));
  }
  return out;
}

}  // namespace

TEST_CASE("small-alphabet languages: generator, predicate and count agree to length 9") {
  struct Ref {
    const char* name;
    std::function<bool(const Letters&)> pred;
  };
  const std::vector<Ref> refs{{"L_eq", oracle::leq},
                              {"L_3eq", ref_l3eq},
                              {"Pal_sharp", ref_pal_sharp},
                              {"EvenPal", ref_even_pal}};
  for (const auto& r : refs) {
    CAPTURE(r.name);
    const auto& lang = corpus_language(r.name);
    for (std::size_t n = 0; n <= 9; ++n) {
      std::set<Word> want;
      for (const auto& w : oracle::words_of_length(lang.alphabet, n)) {
        CHECK(lang.contains(Word(w)) == r.pred(w));
        if (r.pred(w)) want.insert(Word(w));
      }
      const auto got = lang.generate(n);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(as_set(got) == want);
      CHECK(lang.count(n) == want.size());
    }
  }
}

TEST_CASE("l2_members") {
  CHECK(l2_members(4) == std::vector<Word>{{1, 3, 15, 5}, {2, 6, 30, 10}});
  CHECK(l2_members(6).empty());
  CHECK(l2_members(0).empty());
  CHECK(l2_members(16).size() == 16);
  for (std::size_t t = 1; t <= 8; ++t) {
    const auto members = l2_members(4 * t);
    CHECK(members.size() == (std::size_t{1} << t));
    std::vector<Word> want;
    for (const auto& l : oracle::l2(4 * t)) want.push_back(Word(l));
    CHECK(members == want);
  }
}

TEST_CASE("L2 is contained in L2_1, L2_2 and L2_prime up to length 32") {
  for (std::size_t n = 4; n <= 32; n += 4) {
    for (const auto& w : l2_members(n)) {
      CHECK(in_l2(w));
      CHECK(in_l2_1(w));
      CHECK(in_l2_2(w));
      CHECK(in_l2_prime(w));
    }
  }
}

TEST_CASE("L2 predicate against the oracle on every word of small length") {
  const Letters alphabet{1, 2, 3, 5, 6, 10, 15, 30};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto want = oracle::l2(n);
    const std::set<Letters> members(want.begin(), want.end());
    for (const auto& w : oracle::words_of_length(alphabet, n)) CHECK(in_l2(Word(w)) == members.contains(w));
  }
}

TEST_CASE("grammars for L2_1 and L2_2 match their definitions up to length 8") {
  const CnfGrammar g1 = to_cnf(grammar_l2_1());
  const CnfGrammar g2 = to_cnf(grammar_l2_2());
  const auto e1 = enumerate_language(g1, 8);
  const auto e2 = enumerate_language(g2, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    CAPTURE(n);
    std::set<Word> got1, got2;
    for (const auto& w : e1)
      if (w.size() == n) got1.insert(w);
    for (const auto& w : e2)
      if (w.size() == n) got2.insert(w);
    CHECK(got1 == ref_l2_1(n));
    CHECK(got2 == ref_l2_2(n));
    CHECK(as_set(corpus_language("L2_1").generate(n)) == got1);
    CHECK(as_set(corpus_language("L2_2").generate(n)) == got2);
    CHECK(corpus_language("L2_1").count(n) == got1.size());
  }
  // Predicates agree with CYK on every word up to length 5.
  for (const auto& w : oracle::words_upto({1, 2, 3, 5, 6, 10, 15, 30}, 5)) {
    CHECK(in_l2_1(Word(w)) == cyk_member(g1, Word(w)));
    CHECK(in_l2_2(Word(w)) == cyk_member(g2, Word(w)));
  }
}

TEST_CASE("membership examples") {
  CHECK(in_l2_1(Word{1, 3, 5}));
  CHECK(in_l2_2(Word{1, 5}));
  const Word w{1, 2, 6, 3, 15, 30, 10, 5};
  CHECK(in_l2_1(w));
  CHECK(in_l2_2(w));
  CHECK(in_l2(w));
  CHECK(in_l2_dprime(Word{97, 98, 99, 99}));
  CHECK_FALSE(in_l2_dprime(Word{97, 98, 99}));
  CHECK_FALSE(in_l2_dprime(Word{}));
  CHECK_FALSE(in_l2(Word{}));
}

TEST_CASE("L2_dprime and L2_prime") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& w : oracle::words_of_length({97, 98, 99}, n < 8 ? n : 0)) {
      CHECK(in_l2_dprime(Word(w)) == oracle::anbnc2n(w));
    }
    const auto pp = l2pp_members(n);
    CHECK(pp.size() == (n >= 4 && n % 4 == 0 ? 1u : 0u));
    for (const auto& w : pp) CHECK(oracle::anbnc2n({w.begin(), w.end()}));
  }
  const auto& lp = corpus_language("L2_prime");
  for (std::size_t n : {4u, 8u}) {
    const auto members = lp.generate(n);
    CHECK(lp.count(n) == members.size());
    CHECK(members.size() == (n == 4 ? 64u : 4096u));
    for (const auto& w : members) CHECK(in_l2_prime(w));
  }
  CHECK_FALSE(in_l2_prime(Word{1, 6, 5, 10, 10}));
  CHECK_FALSE(in_l2_prime(Word{1, 6, 5}));
}

TEST_CASE("intersection check") {
  const auto r3 = intersection_check(3);
  CHECK(r3.holds());
  for (const auto& l : r3.levels) CHECK(l.intersection_count == 0);

  const auto r8 = intersection_check(8);
  CHECK(r8.holds());
  REQUIRE(r8.levels.size() == 8);
  const std::vector<std::size_t> want{0, 0, 0, 2, 0, 0, 0, 4};
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(r8.levels[n - 1].n == n);
    CHECK(r8.levels[n - 1].intersection_count == want[n - 1]);
    CHECK(r8.levels[n - 1].expected_count == oracle::l2(n).size());
  }
  CHECK_THROWS_AS(intersection_check(13), CostGuardError);
}

TEST_CASE("corpus lookup and cost guard") {
  CHECK_THROWS_AS(corpus_language("nope"), InvalidArgument);
  CHECK_THROWS_AS(generate_checked(corpus_language("L2_1"), 14), CostGuardError);
  CHECK(generate_checked(corpus_language("L2"), 16).size() == 16);
  for (const auto& name : corpus_names()) CHECK(corpus_language(name).name == name);
  CHECK(named_grammar("AmBmCt").nonterminal_count() == 3);
  CHECK_THROWS_AS(named_grammar("nope"), InvalidArgument);
}
